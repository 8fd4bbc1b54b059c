#pragma once

// The field K(eps) of rational functions in one parameter, stored as a reduced
// quotient with monic denominator so that equality is structural.

#include <utility>

#include "ptdiag/errors.hpp"
#include "ptdiag/poly.hpp"

namespace ptdiag {

template <Field K>
class RationalFunction {
 public:
  RationalFunction() : den_(K(1)) {}
  RationalFunction(long c) : num_(K(c)), den_(K(1)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Poly<K> num) : num_(std::move(num)), den_(K(1)) {}  // NOLINT(google-explicit-constructor)
  // Throws DomainError for a zero denominator.
  RationalFunction(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  const Poly<K>& num() const { return num_; }
  const Poly<K>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFunction operator-() const { return from_canonical(-num_, den_); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  // Throws DomainError when b is the zero function.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DomainError("division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  // Exact value at a parameter point. Throws DomainError at a pole.
  template <Field S>
    requires std::constructible_from<S, K>
  S eval_at(const S& x) const {
    const S d = evaluate(den_, x);
    if (d == S{}) throw DomainError("evaluation at a pole: the denominator vanishes there");
    return evaluate(num_, x) / d;
  }

 private:
  static RationalFunction from_canonical(Poly<K> num, Poly<K> den) {
    RationalFunction r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  void normalize() {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly<K>(K(1));
      return;
    }
    const Poly<K> g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
    const K inv = K(1) / den_.leading();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }

  Poly<K> num_;
  Poly<K> den_;
};

template <Field K>
RationalFunction<K> conj(const RationalFunction<K>& r) {
  return RationalFunction<K>(conj(r.num()), conj(r.den()));
}

template <Field K>
bool is_real(const RationalFunction<K>& r) {
  return is_real(r.num()) && is_real(r.den());
}

using QRatFunc = RationalFunction<BigRational>;
using GRatFunc = RationalFunction<GaussianRational>;

}  // namespace ptdiag
