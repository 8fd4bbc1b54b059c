#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ptdiag/poly.hpp"

namespace ptdiag {

// Signed remainder sequence p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k).
// The last element is gcd(p, p') up to a nonzero factor.
class SturmChain {
 public:
  explicit SturmChain(const QPoly& p);

  const std::vector<QPoly>& chain() const { return chain_; }

  // Sign changes of the chain evaluated at x; zeros are skipped.
  std::size_t variations_at(const BigRational& x) const;
  std::size_t variations_at_minus_infinity() const;
  std::size_t variations_at_plus_infinity() const;

 private:
  std::vector<QPoly> chain_;
};

using RationalInterval = std::pair<BigRational, BigRational>;

// Number of distinct real roots of p in the half-open interval (lo, hi], or
// on the whole real line when no interval is given. Throws DomainError for
// p = 0 or lo >= hi.
std::size_t sturm_count_real_roots(const QPoly& p, const std::optional<RationalInterval>& interval = {});

// Closed interval [lo, hi] holding exactly one real root. lo == hi marks an
// exactly located rational root; otherwise neither endpoint is a root.
struct RootInterval {
  BigRational lo;
  BigRational hi;

  bool is_exact() const { return lo == hi; }
  BigRational width() const { return hi - lo; }
  bool contains(const BigRational& x) const { return lo <= x && x <= hi; }
  friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

// Disjoint isolating intervals, sorted ascending, one per distinct real root,
// each of width at most max_width. Throws DomainError for p = 0 or
// max_width <= 0.
std::vector<RootInterval> isolate_real_roots(const QPoly& p, const BigRational& max_width);

// Strict upper bound on the absolute value of every complex root of p.
BigRational cauchy_root_bound(const QPoly& p);

// The root inside `interval` if that root is rational, found without factoring:
// after clearing denominators every rational root is k / a_n for an integer k,
// where a_n is the leading coefficient, so narrowing the interval below
// 1 / |a_n| leaves at most two candidates to test exactly. `interval` must be
// an isolating interval of p as produced by isolate_real_roots.
std::optional<BigRational> exact_rational_root(const QPoly& p, const RootInterval& interval);

}  // namespace ptdiag
