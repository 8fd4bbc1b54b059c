#include "ptdiag/exact_arith.hpp"

#include <cctype>
#include <utility>

#include "ptdiag/errors.hpp"

namespace ptdiag {

BigInt int_gcd(BigInt p0, BigInt p1) {
  p0 = ::abs(p0);
  p1 = ::abs(p1);
  if (p0 < p1) std::swap(p0, p1);
  while (p1 != 0) {
    BigInt p2 = p0 % p1;
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  return p0;
}

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

BigRational BigRational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num_text = body.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw InputError("not a rational number: '" + std::string(text) + "'");
  }
  BigInt num{std::string(num_text)};
  BigInt den{std::string(den_text)};
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return BigRational(num, den);
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-q_)); }

BigRational& BigRational::operator+=(const BigRational& rhs) {
  q_ += rhs.q_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  q_ -= rhs.q_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  q_ *= rhs.q_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw DomainError("rational division by zero");
  q_ /= rhs.q_;
  return *this;
}

BigRational BigRational::abs() const { return BigRational(mpq_class(::abs(q_))); }

BigRational BigRational::pow(unsigned exponent) const {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), exponent);
  return BigRational(num, den);
}

BigInt BigRational::floor() const {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

BigInt BigRational::ceil() const {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::string BigRational::to_string() const { return q_.get_str(); }

std::string BigRational::to_decimal(unsigned digits) const {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  // Truncate toward zero so that the sign is carried by the integer part.
  BigInt scaled;
  BigInt num = q_.get_num() * scale;
  mpz_tdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), q_.get_den_mpz_t());
  std::string sign = (q_ < 0) ? "-" : "";
  std::string mag = BigInt(::abs(scaled)).get_str();
  if (digits == 0) return sign + mag;
  if (mag.size() <= digits) mag.insert(0, digits + 1 - mag.size(), '0');
  mag.insert(mag.size() - digits, ".");
  return sign + mag;
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  BigRational re = re_ * rhs.re_ - im_ * rhs.im_;
  BigRational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
  if (rhs.is_zero()) throw DomainError("Gaussian rational division by zero");
  const BigRational n = rhs.abs2();
  *this *= rhs.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string imag;
  if (im_ == BigRational(1)) {
    imag = "i";
  } else if (im_ == BigRational(-1)) {
    imag = "-i";
  } else {
    imag = im_.to_string() + "*i";
  }
  if (re_.is_zero()) return imag;
  if (im_.sign() < 0) return re_.to_string() + " - " + imag.substr(1);
  return re_.to_string() + " + " + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace ptdiag
