#pragma once

// Dense square matrices over a commutative ring.

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "ptdiag/errors.hpp"
#include "ptdiag/poly.hpp"

namespace ptdiag {

template <Ring R>
class Matrix {
 public:
  using value_type = R;

  // N x N zero matrix; N must be positive.
  explicit Matrix(std::size_t dim) : dim_(dim), a_(dim * dim) {
    if (dim == 0) throw DomainError("matrix dimension must be positive");
  }
  Matrix(std::size_t dim, std::vector<R> row_major) : dim_(dim), a_(std::move(row_major)) {
    if (dim == 0) throw DomainError("matrix dimension must be positive");
    if (a_.size() != dim * dim) throw DomainError("matrix needs exactly N*N entries");
  }
  Matrix(std::initializer_list<std::initializer_list<R>> rows) : dim_(rows.size()) {
    if (dim_ == 0) throw DomainError("matrix dimension must be positive");
    a_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
      if (row.size() != dim_) throw DomainError("matrix rows must have N entries");
      a_.insert(a_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = R(1);
    return m;
  }

  std::size_t dim() const { return dim_; }
  R& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
  const std::vector<R>& row_major() const { return a_; }

  bool is_zero() const {
    for (const auto& x : a_) {
      if (!(x == R{})) return false;
    }
    return true;
  }

  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same(b);
    for (std::size_t k = 0; k < a.a_.size(); ++k) a.a_[k] = a.a_[k] + b.a_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same(b);
    for (std::size_t k = 0; k < a.a_.size(); ++k) a.a_[k] = a.a_[k] - b.a_[k];
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.check_same(b);
    const std::size_t n = a.dim_;
    Matrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const R& aik = a(i, k);
        if (aik == R{}) continue;
        for (std::size_t j = 0; j < n; ++j) c(i, j) = c(i, j) + aik * b(k, j);
      }
    }
    return c;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;

  Matrix scaled(const R& s) const {
    Matrix r = *this;
    for (auto& x : r.a_) x = x * s;
    return r;
  }

  Matrix transpose() const {
    Matrix t(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  R trace() const {
    R t{};
    for (std::size_t i = 0; i < dim_; ++i) t = t + (*this)(i, i);
    return t;
  }

 private:
  void check_same(const Matrix& b) const {
    if (dim_ != b.dim_) throw DomainError("matrix dimension mismatch");
  }

  std::size_t dim_;
  std::vector<R> a_;
};

template <Ring R, class Fn>
auto map_entries(const Matrix<R>& m, Fn&& f) {
  using Out = std::decay_t<decltype(f(std::declval<const R&>()))>;
  std::vector<Out> v;
  v.reserve(m.row_major().size());
  for (const auto& x : m.row_major()) v.push_back(f(x));
  return Matrix<Out>(m.dim(), std::move(v));
}

// Entrywise complex conjugation, the action of time reversal. For entries that
// are polynomials in the real parameter, only coefficients are conjugated.
template <Ring R>
Matrix<R> conj(const Matrix<R>& m) {
  return map_entries(m, [](const R& x) { return conj(x); });
}

template <Ring R>
Matrix<R> conjugate_transpose(const Matrix<R>& m) {
  return conj(m).transpose();
}

// p(M) by Horner's scheme over matrices.
template <Ring R>
Matrix<R> evaluate_poly_at_matrix(const Poly<R>& p, const Matrix<R>& m) {
  const std::size_t n = m.dim();
  Matrix<R> acc(n);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) = acc(i, i) + *it;
  }
  return acc;
}

// lambda*E - M as a matrix of polynomials in lambda.
template <Ring R>
Matrix<Poly<R>> characteristic_matrix(const Matrix<R>& m) {
  Matrix<Poly<R>> out = map_entries(m, [](const R& x) { return -Poly<R>(x); });
  for (std::size_t i = 0; i < m.dim(); ++i) out(i, i) = out(i, i) + Poly<R>::variable();
  return out;
}

// Determinant by Gaussian elimination over a field.
template <Field F>
F gauss_determinant(Matrix<F> m) {
  const std::size_t n = m.dim();
  F det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == F{}) ++pivot;
    if (pivot == n) return F{};
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det = det * m(col, col);
    const F inv = F(1) / m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == F{}) continue;
      const F f = m(r, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(r, j) = m(r, j) - f * m(col, j);
    }
  }
  return det;
}

// Gauss-Jordan inverse. Throws DomainError for a singular matrix.
template <Field F>
Matrix<F> inverse(Matrix<F> m) {
  const std::size_t n = m.dim();
  Matrix<F> inv = Matrix<F>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == F{}) ++pivot;
    if (pivot == n) throw DomainError("matrix is singular");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(m(pivot, j), m(col, j));
      std::swap(inv(pivot, j), inv(col, j));
    }
    const F s = F(1) / m(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) = m(col, j) * s;
      inv(col, j) = inv(col, j) * s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col) == F{}) continue;
      const F f = m(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) = m(r, j) - f * m(col, j);
        inv(r, j) = inv(r, j) - f * inv(col, j);
      }
    }
  }
  return inv;
}

using GMatrix = Matrix<GaussianRational>;

}  // namespace ptdiag
