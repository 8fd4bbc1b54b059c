#pragma once

// Human-readable polynomial rendering: descending powers, explicit '*' and
// '^'. Polynomials in eps render in the entry-expression syntax, so the text
// parses back to the same polynomial.

#include <string>
#include <string_view>

#include "ptdiag/exact_arith.hpp"
#include "ptdiag/poly.hpp"
#include "ptdiag/ratfunc.hpp"
#include "ptdiag/sturm.hpp"

namespace ptdiag {

struct CoeffText {
  bool negative = false;
  std::string magnitude;
  bool is_one = false;
};

inline CoeffText coeff_text(const BigRational& q) {
  return {q.sign() < 0, q.abs().to_string(), q.abs() == BigRational(1)};
}

inline CoeffText coeff_text(const GaussianRational& z) {
  if (z.is_real()) return coeff_text(z.re());
  if (z.re().is_zero()) {
    const BigRational b = z.im().abs();
    return {z.im().sign() < 0, b == BigRational(1) ? "i" : b.to_string() + "*i", false};
  }
  return {false, "(" + z.to_string() + ")", false};
}

template <Ring R>
std::string format_poly(const Poly<R>& p, std::string_view var);

template <Ring R>
CoeffText coeff_text(const Poly<R>& c) {
  std::size_t nonzero = 0;
  std::size_t last = 0;
  for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
    if (!(c.coeffs()[k] == R{})) {
      ++nonzero;
      last = k;
    }
  }
  if (nonzero == 1 && last == 0) return coeff_text(c.coeffs()[0]);
  return {false, "(" + format_poly(c, "eps") + ")", false};
}

template <Field K>
CoeffText coeff_text(const RationalFunction<K>& r) {
  if (r.is_polynomial()) return coeff_text(r.num());
  return {false, "((" + format_poly(r.num(), "eps") + ")/(" + format_poly(r.den(), "eps") + "))", false};
}

template <Ring R>
std::string format_poly(const Poly<R>& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == R{}) continue;
    const CoeffText t = coeff_text(c[k]);
    if (first) {
      if (t.negative) out += "-";
    } else {
      out += t.negative ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += t.is_one ? "1" : t.magnitude;
      continue;
    }
    if (!t.is_one) out += t.magnitude + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

inline std::string format_interval(const RootInterval& iv) {
  return "[" + iv.lo.to_string() + ", " + iv.hi.to_string() + "]";
}

}  // namespace ptdiag
