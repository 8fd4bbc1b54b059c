#pragma once

#include <cstddef>
#include <utility>

#include "ptdiag/errors.hpp"
#include "ptdiag/matrix.hpp"

namespace ptdiag {

// Parity operator P with P^2 = E. Any involution is accepted, not only
// permutation matrices.
class ParitySpec {
 public:
  // Throws DomainError unless p * p is the unit matrix.
  explicit ParitySpec(GMatrix p) : p_(std::move(p)) {
    if (!(p_ * p_ == GMatrix::identity(p_.dim()))) throw DomainError("parity matrix is not an involution (P^2 != E)");
  }

  // Ones on the minor diagonal; sigma_x for N = 2.
  static ParitySpec anti_diagonal(std::size_t dim) {
    GMatrix p(dim);
    for (std::size_t i = 0; i < dim; ++i) p(i, dim - 1 - i) = GaussianRational(1);
    return ParitySpec(std::move(p));
  }

  const GMatrix& matrix() const { return p_; }
  std::size_t dim() const { return p_.dim(); }

 private:
  GMatrix p_;
};

// [H, PT] = 0 with T acting as entrywise conjugation, i.e. H P = P conj(H).
// R is Q(i) or a polynomial ring over it in the real parameter.
template <Ring R>
  requires std::constructible_from<R, GaussianRational>
bool pt_invariance_check(const Matrix<R>& h, const ParitySpec& parity) {
  if (h.dim() != parity.dim()) throw DomainError("matrix and parity dimensions differ");
  const Matrix<R> p = map_entries(parity.matrix(), [](const GaussianRational& x) { return R(x); });
  return h * p == p * conj(h);
}

}  // namespace ptdiag
