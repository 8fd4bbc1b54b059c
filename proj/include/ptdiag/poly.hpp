#pragma once

// Dense univariate polynomials over an abstract coefficient ring, with the
// Euclidean machinery (long division, monic gcd, square-free test) available
// whenever the coefficients form a field.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "ptdiag/errors.hpp"
#include "ptdiag/exact_arith.hpp"

namespace ptdiag {

// Degree of a polynomial. The zero polynomial has degree minus infinity,
// which is a distinct state and not an integer sentinel.
class Degree {
 public:
  explicit Degree(std::size_t d) : value_(d), finite_(true) {}
  static Degree minus_infinity() { return Degree(); }

  bool is_minus_infinity() const { return !finite_; }
  std::size_t value() const {
    if (!finite_) throw InvariantViolation("degree of the zero polynomial has no integer value");
    return value_;
  }

  friend bool operator==(const Degree& a, const Degree& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend bool operator<(const Degree& a, const Degree& b) {
    if (!b.finite_) return false;
    if (!a.finite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(const Degree& a, const Degree& b) { return b < a; }
  friend bool operator<=(const Degree& a, const Degree& b) { return !(b < a); }
  friend bool operator>=(const Degree& a, const Degree& b) { return !(a < b); }
  friend bool operator==(const Degree& a, std::size_t d) { return a.finite_ && a.value_ == d; }

  std::string to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

 private:
  Degree() = default;
  std::size_t value_ = 0;
  bool finite_ = false;
};

// Coefficient rings must be default-constructible to zero, constructible from
// small integers, and closed under +, -, *.
template <class R>
concept Ring = std::regular<R> && std::constructible_from<R, long> && requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
};

template <class F>
concept Field = Ring<F> && requires(const F& a, const F& b) {
  { a / b } -> std::convertible_to<F>;
};

template <Ring R>
class Poly {
 public:
  using coefficient_type = R;

  Poly() = default;
  explicit Poly(long c) : Poly(R(c)) {}
  Poly(R c) {  // NOLINT(google-explicit-constructor)
    if (!(c == R{})) coeffs_.push_back(std::move(c));
  }
  // coeffs[k] multiplies x^k; trailing zeros are dropped.
  explicit Poly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly monomial(R c, std::size_t power) {
    if (c == R{}) return {};
    std::vector<R> v(power + 1);
    v[power] = std::move(c);
    return Poly(std::move(v));
  }
  static Poly variable() { return monomial(R(1), 1); }

  const std::vector<R>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // True for the zero polynomial and for nonzero constants.
  bool is_constant() const { return coeffs_.size() <= 1; }
  Degree degree() const { return coeffs_.empty() ? Degree::minus_infinity() : Degree(coeffs_.size() - 1); }

  const R& leading() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }
  R coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : R{}; }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] + rhs.coeffs_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] - rhs.coeffs_[k];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == R{}) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Poly(std::move(out));
  }

  friend bool operator==(const Poly&, const Poly&) = default;

  // Multiply every coefficient by a scalar.
  Poly scaled(const R& c) const {
    std::vector<R> v = coeffs_;
    for (auto& x : v) x = x * c;
    return Poly(std::move(v));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == R{}) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

template <Ring R>
Poly<R> pow(const Poly<R>& p, unsigned exponent) {
  Poly<R> result(R(1));
  Poly<R> base = p;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

template <Ring R>
Poly<R> derivative(const Poly<R>& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<R> d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * R(static_cast<long>(k));
  return Poly<R>(std::move(d));
}

// Horner evaluation; the point may live in any ring the coefficients embed in.
template <Ring R, Ring S>
  requires std::constructible_from<S, R>
S evaluate(const Poly<R>& p, const S& x) {
  S acc{};
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + S(*it);
  return acc;
}

// Coefficient-wise image under f.
template <Ring R, class Fn>
auto map_coeffs(const Poly<R>& p, Fn&& f) {
  using Out = std::decay_t<decltype(f(std::declval<const R&>()))>;
  std::vector<Out> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(f(c));
  return Poly<Out>(std::move(v));
}

template <Ring R>
Poly<R> conj(const Poly<R>& p) {
  return map_coeffs(p, [](const R& c) { return conj(c); });
}

template <Ring R>
bool is_real(const Poly<R>& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const R& c) { return is_real(c); });
}

// Exact division by a positive integer, available in every ring containing Q.
template <Field F>
F divide_by_integer(const F& x, long k) {
  return x / F(k);
}

template <Ring R>
Poly<R> divide_by_integer(const Poly<R>& p, long k) {
  return map_coeffs(p, [k](const R& c) { return divide_by_integer(c, k); });
}

// ---------------------------------------------------------------------------
// Euclidean operations over a coefficient field.

template <Field F>
struct DivMod {
  Poly<F> quotient;
  Poly<F> remainder;
};

// p0 = quotient * p1 + remainder with deg(remainder) < deg(p1).
template <Field F>
DivMod<F> poly_divmod(const Poly<F>& p0, const Poly<F>& p1) {
  if (p1.is_zero()) throw DomainError("polynomial division by the zero polynomial");
  std::vector<F> rem = p0.coeffs();
  const std::size_t n1 = p1.coeffs().size();
  if (rem.size() < n1) return {Poly<F>(), p0};
  std::vector<F> quo(rem.size() - n1 + 1);
  const F& lead = p1.leading();
  for (std::size_t k = rem.size(); k-- >= n1;) {
    if (rem[k] == F{}) continue;
    F factor = rem[k] / lead;
    const std::size_t shift = k - (n1 - 1);
    for (std::size_t j = 0; j < n1; ++j) rem[shift + j] = rem[shift + j] - factor * p1.coeffs()[j];
    quo[shift] = std::move(factor);
  }
  rem.resize(n1 - 1);
  return {Poly<F>(std::move(quo)), Poly<F>(std::move(rem))};
}

// Division that must leave no remainder; a remainder means an upstream bug.
template <Field F>
Poly<F> exact_quotient(const Poly<F>& p0, const Poly<F>& p1) {
  auto [q, r] = poly_divmod(p0, p1);
  if (!r.is_zero()) throw InvariantViolation("exact polynomial division left a nonzero remainder");
  return q;
}

template <Field F>
bool divides(const Poly<F>& divisor, const Poly<F>& p) {
  return poly_divmod(p, divisor).remainder.is_zero();
}

template <Field F>
Poly<F> monic(const Poly<F>& p) {
  if (p.is_zero()) return p;
  const F inv = F(1) / p.leading();
  return p.scaled(inv);
}

// Monic greatest common divisor by the Euclidean algorithm, normalizing each
// remainder to be monic so that coefficient sizes stay in check.
template <Field F>
Poly<F> poly_gcd(const Poly<F>& p0, const Poly<F>& p1) {
  if (p0.is_zero() && p1.is_zero()) throw DomainError("gcd of two zero polynomials");
  Poly<F> a = monic(p0);
  Poly<F> b = monic(p1);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Poly<F> r = monic(poly_divmod(a, b).remainder);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

template <Field F>
struct SquarefreeCheck {
  bool is_squarefree;
  Poly<F> witness;  // gcd(p, p'), monic
};

template <Field F>
SquarefreeCheck<F> squarefree_check(const Poly<F>& p) {
  if (p.is_constant()) throw DomainError("square-free test needs a polynomial of degree >= 1");
  Poly<F> w = poly_gcd(p, derivative(p));
  const bool sqfree = w.degree() == 0;
  return {sqfree, std::move(w)};
}

// Monic polynomial with the same roots as p, each of multiplicity one.
template <Field F>
Poly<F> squarefree_part(const Poly<F>& p) {
  if (p.is_constant()) throw DomainError("square-free part needs a polynomial of degree >= 1");
  return monic(exact_quotient(p, poly_gcd(p, derivative(p))));
}

using QPoly = Poly<BigRational>;
using GPoly = Poly<GaussianRational>;

// Real and imaginary parts of a Q(i)-coefficient polynomial, as polynomials over Q.
inline QPoly real_part(const GPoly& p) {
  return map_coeffs(p, [](const GaussianRational& c) { return c.re(); });
}
inline QPoly imag_part(const GPoly& p) {
  return map_coeffs(p, [](const GaussianRational& c) { return c.im(); });
}
inline GPoly to_gaussian(const QPoly& p) {
  return map_coeffs(p, [](const BigRational& c) { return GaussianRational(c); });
}

}  // namespace ptdiag
