#pragma once

#include <cstddef>
#include <vector>

#include "ptdiag/matrix.hpp"
#include "ptdiag/poly.hpp"

namespace ptdiag {

// adj(lambda*E - M) = sum_k lambda^k B_k, with B_{N-1} = E.
template <Ring R>
class AdjugatePoly {
 public:
  explicit AdjugatePoly(std::vector<Matrix<R>> coeff_matrices) : b_(std::move(coeff_matrices)) {}

  std::size_t dim() const { return b_.front().dim(); }
  const std::vector<Matrix<R>>& coeff_matrices() const { return b_; }

  // Entry (i, j) of the adjugate as a polynomial in lambda.
  Poly<R> entry(std::size_t i, std::size_t j) const {
    std::vector<R> c;
    c.reserve(b_.size());
    for (const auto& bk : b_) c.push_back(bk(i, j));
    return Poly<R>(std::move(c));
  }

  Matrix<Poly<R>> as_poly_matrix() const {
    const std::size_t n = dim();
    std::vector<Poly<R>> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) entries.push_back(entry(i, j));
    }
    return Matrix<Poly<R>>(n, std::move(entries));
  }

 private:
  std::vector<Matrix<R>> b_;
};

template <Ring R>
struct CharpolyAdjugate {
  Poly<R> char_poly;
  AdjugatePoly<R> adjugate;
};

// Faddeev-LeVerrier: with M_1 = E and c_N = 1,
//   c_{N-k} = -tr(M * M_k) / k,   M_{k+1} = M * M_k + c_{N-k} E,
// giving det(lambda*E - M) = sum c_j lambda^j and B_{N-k} = M_k.
// The ring must contain Q (exact division by 1..N).
template <Ring R>
CharpolyAdjugate<R> charpoly_and_adjugate(const Matrix<R>& m) {
  const std::size_t n = m.dim();
  std::vector<R> c(n + 1);
  c[n] = R(1);
  std::vector<Matrix<R>> b(n, Matrix<R>(n));
  Matrix<R> mk = Matrix<R>::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    b[n - k] = mk;
    const Matrix<R> prod = m * mk;
    c[n - k] = -divide_by_integer(prod.trace(), static_cast<long>(k));
    if (k < n) {
      mk = prod;
      for (std::size_t i = 0; i < n; ++i) mk(i, i) = mk(i, i) + c[n - k];
    }
  }
  return {Poly<R>(std::move(c)), AdjugatePoly<R>(std::move(b))};
}

// Determinant by cofactor expansion along the first row. Exponential cost;
// used only by the cofactor oracle on small matrices.
template <Ring R>
R laplace_determinant(const Matrix<R>& m) {
  const std::size_t n = m.dim();
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  R det{};
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == R{}) continue;
    Matrix<R> minor(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    const R term = m(0, j) * laplace_determinant(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

inline constexpr std::size_t kCofactorOracleMaxDim = 6;

// Classical adjugate: transposed matrix of signed minors.
template <Ring R>
Matrix<R> adjugate_cofactor_oracle(const Matrix<R>& m) {
  const std::size_t n = m.dim();
  if (n > kCofactorOracleMaxDim) throw DomainError("cofactor adjugate oracle is limited to N <= 6");
  Matrix<R> adj(n);
  if (n == 1) {
    adj(0, 0) = R(1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix<R> minor(n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      const R d = laplace_determinant(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? d : -d;
    }
  }
  return adj;
}

}  // namespace ptdiag
