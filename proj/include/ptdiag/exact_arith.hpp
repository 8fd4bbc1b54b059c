#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

namespace ptdiag {

using BigInt = mpz_class;

// Euclid's algorithm on nonnegative integers: p0 = q1*p1 + p2, then recurse
// on (p1, p2) until the remainder vanishes. Argument order is irrelevant;
// negative inputs are replaced by their absolute values. gcd(0, 0) = 0.
BigInt int_gcd(BigInt p0, BigInt p1);

// Exact rational number kept in lowest terms with a positive denominator, so
// that equality is structural.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  // Throws DomainError when den == 0.
  BigRational(const BigInt& num, const BigInt& den);

  // Accepts "p", "-p", "p/q" (q > 0 after normalization). Throws InputError.
  static BigRational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  // Throws DomainError on division by zero.
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  BigRational abs() const;
  BigRational pow(unsigned exponent) const;
  BigInt floor() const;
  BigInt ceil() const;

  // "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  // Truncated decimal expansion with `digits` fractional digits, computed with
  // integer arithmetic only.
  std::string to_decimal(unsigned digits) const;

 private:
  explicit BigRational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

inline BigRational conj(const BigRational& q) { return q; }
inline bool is_real(const BigRational&) { return true; }

// Complex number with exact rational real and imaginary parts: an element
// of the field Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(BigRational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {BigRational(0), BigRational(1)}; }

  const BigRational& re() const { return re_; }
  const BigRational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  // |z|^2 = z * conj(z), always a nonnegative rational.
  BigRational abs2() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& rhs);
  GaussianRational& operator-=(const GaussianRational& rhs);
  GaussianRational& operator*=(const GaussianRational& rhs);
  // Throws DomainError on division by zero.
  GaussianRational& operator/=(const GaussianRational& rhs);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

  std::string to_string() const;

 private:
  BigRational re_;
  BigRational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }
inline bool is_real(const GaussianRational& z) { return z.is_real(); }

}  // namespace ptdiag
