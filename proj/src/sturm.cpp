#include "ptdiag/sturm.hpp"

#include <algorithm>

namespace ptdiag {

namespace {

std::size_t count_sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int sign_at(const QPoly& p, const BigRational& x) { return evaluate(p, x).sign(); }

// Integer-coefficient primitive multiple of p with positive leading coefficient.
std::vector<BigInt> clear_denominators(const QPoly& p) {
  BigInt lcm = 1;
  for (const auto& c : p.coeffs()) {
    const BigInt d = c.denominator();
    lcm = lcm / int_gcd(lcm, d) * d;
  }
  std::vector<BigInt> out;
  out.reserve(p.coeffs().size());
  BigInt content = 0;
  for (const auto& c : p.coeffs()) {
    out.push_back(c.numerator() * (lcm / c.denominator()));
    content = int_gcd(content, out.back());
  }
  const bool flip = out.back() < 0;
  for (auto& c : out) {
    c /= content;
    if (flip) c = -c;
  }
  return out;
}

}  // namespace

SturmChain::SturmChain(const QPoly& p) {
  if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
  chain_.push_back(p);
  QPoly next = derivative(p);
  while (!next.is_zero()) {
    chain_.push_back(next);
    const auto& a = chain_[chain_.size() - 2];
    const auto& b = chain_.back();
    next = -poly_divmod(a, b).remainder;
  }
}

std::size_t SturmChain::variations_at(const BigRational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(sign_at(q, x));
  return count_sign_changes(signs);
}

std::size_t SturmChain::variations_at_plus_infinity() const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(q.leading().sign());
  return count_sign_changes(signs);
}

std::size_t SturmChain::variations_at_minus_infinity() const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) {
    const int s = q.leading().sign();
    signs.push_back(q.degree().value() % 2 == 0 ? s : -s);
  }
  return count_sign_changes(signs);
}

std::size_t sturm_count_real_roots(const QPoly& p, const std::optional<RationalInterval>& interval) {
  if (p.is_zero()) throw DomainError("cannot count roots of the zero polynomial");
  if (p.is_constant()) return 0;
  // Square-free part: a repeated root at an endpoint zeroes the whole chain.
  const SturmChain chain(squarefree_part(p));
  if (!interval) return chain.variations_at_minus_infinity() - chain.variations_at_plus_infinity();
  const auto& [lo, hi] = *interval;
  if (!(lo < hi)) throw DomainError("root counting interval must satisfy lo < hi");
  return chain.variations_at(lo) - chain.variations_at(hi);
}

BigRational cauchy_root_bound(const QPoly& p) {
  if (p.is_zero()) throw DomainError("root bound of the zero polynomial");
  BigRational m = 0;
  const auto& lead = p.leading();
  for (std::size_t k = 0; k + 1 < p.coeffs().size(); ++k) {
    m = std::max(m, (p.coeffs()[k] / lead).abs());
  }
  return m + BigRational(1);
}

std::vector<RootInterval> isolate_real_roots(const QPoly& p, const BigRational& max_width) {
  if (p.is_zero()) throw DomainError("cannot isolate roots of the zero polynomial");
  if (max_width.sign() <= 0) throw DomainError("isolation width must be positive");
  std::vector<RootInterval> out;
  if (p.is_constant()) return out;

  const QPoly sqfree = squarefree_part(p);
  const SturmChain chain(sqfree);
  const BigRational bound = cauchy_root_bound(sqfree);

  // Work items are half-open (lo, hi] with endpoints that are not roots, so
  // V(lo) - V(hi) is the exact count inside.
  struct Item {
    BigRational lo, hi;
    std::size_t v_lo, v_hi;
  };
  std::vector<Item> stack{{-bound, bound, chain.variations_at(-bound), chain.variations_at(bound)}};
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    const std::size_t count = it.v_lo - it.v_hi;
    if (count == 0) continue;
    if (count == 1 && it.hi - it.lo <= max_width) {
      out.push_back({it.lo, it.hi});
      continue;
    }
    BigRational mid = (it.lo + it.hi) / BigRational(2);
    const std::size_t v_mid = chain.variations_at(mid);
    if (evaluate(sqfree, mid).is_zero()) {
      out.push_back({mid, mid});
      // V(mid) equals the count just to the right of the root, so (lo, mid)
      // holds V(lo) - V(mid) - 1 roots.
      if (it.v_lo - v_mid > 1) {
        BigRational shift = (mid - it.lo) / BigRational(4);
        // Step left of mid to a non-root point without crossing another root:
        // shrink until the counts confirm only mid was excluded.
        BigRational left = mid - shift;
        std::size_t v_left = chain.variations_at(left);
        while (evaluate(sqfree, left).is_zero() || v_left != v_mid + 1) {
          shift /= BigRational(2);
          left = mid - shift;
          v_left = chain.variations_at(left);
        }
        stack.push_back({it.lo, left, it.v_lo, v_left});
      }
      if (v_mid - it.v_hi > 0) {
        BigRational shift = (it.hi - mid) / BigRational(4);
        BigRational right = mid + shift;
        std::size_t v_right = chain.variations_at(right);
        while (evaluate(sqfree, right).is_zero() || v_right != v_mid) {
          shift /= BigRational(2);
          right = mid + shift;
          v_right = chain.variations_at(right);
        }
        stack.push_back({right, it.hi, v_right, it.v_hi});
      }
      continue;
    }
    stack.push_back({mid, it.hi, v_mid, it.v_hi});
    stack.push_back({it.lo, mid, it.v_lo, v_mid});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

std::optional<BigRational> exact_rational_root(const QPoly& p, const RootInterval& interval) {
  if (p.is_zero()) throw DomainError("rational root of the zero polynomial");
  if (interval.is_exact()) {
    if (evaluate(p, interval.lo).is_zero()) return interval.lo;
    return std::nullopt;
  }
  const std::vector<BigInt> ints = clear_denominators(p);
  const BigInt lead = ints.back();
  const QPoly sqfree = squarefree_part(p);
  BigRational lo = interval.lo;
  BigRational hi = interval.hi;
  int s_lo = sign_at(sqfree, lo);
  const BigRational limit(BigInt(1), lead);
  while (hi - lo >= limit) {
    BigRational mid = (lo + hi) / BigRational(2);
    const int s_mid = sign_at(sqfree, mid);
    if (s_mid == 0) return mid;
    if (s_mid == s_lo) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  const BigRational scale(lead);
  const BigInt k_lo = (lo * scale).ceil();
  const BigInt k_hi = (hi * scale).floor();
  for (BigInt k = k_lo; k <= k_hi; ++k) {
    BigRational candidate(k, lead);
    if (evaluate(p, candidate).is_zero()) return candidate;
  }
  return std::nullopt;
}

}  // namespace ptdiag
