#include "ptdiag/param_family.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <string>
#include <utility>

#include "ptdiag/charpoly.hpp"

namespace ptdiag {

FamilyPoly family_charpoly(const ParamMatrix& m) { return charpoly_and_adjugate(m).char_poly; }

GMatrix specialize(const ParamMatrix& m, const BigRational& eps0) {
  const GaussianRational x(eps0);
  return map_entries(m, [&x](const EpsPoly& e) { return evaluate(e, x); });
}

GPoly specialize(const FamilyPoly& p, const BigRational& eps0) {
  const GaussianRational x(eps0);
  return map_coeffs(p, [&x](const EpsPoly& c) { return evaluate(c, x); });
}

// ---------------------------------------------------------------------------

EpsPoly content(const FamilyPoly& p) {
  EpsPoly g;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? monic(c) : poly_gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

namespace {

FamilyPoly divide_coeffs(const FamilyPoly& p, const EpsPoly& d) {
  return map_coeffs(p, [&d](const EpsPoly& c) { return exact_quotient(c, d); });
}

EpsPoly eps_pow(const EpsPoly& base, std::size_t e) { return pow(base, static_cast<unsigned>(e)); }

bool odd(std::size_t n) { return n % 2 == 1; }

}  // namespace

FamilyPoly primitive_part(const FamilyPoly& p) {
  if (p.is_zero()) return p;
  return divide_coeffs(p, content(p));
}

FamilyPoly pseudo_remainder(const FamilyPoly& a, const FamilyPoly& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  const std::size_t db = b.degree().value();
  const EpsPoly& lb = b.leading();
  std::size_t e = a.degree().value() - db + 1;
  FamilyPoly r = a;
  while (!r.is_zero() && r.degree() >= Degree(db)) {
    const FamilyPoly s = FamilyPoly::monomial(r.leading(), r.degree().value() - db);
    r = r.scaled(lb) - s * b;
    --e;
  }
  return r.scaled(eps_pow(lb, e));
}

EpsPoly resultant(const FamilyPoly& a_in, const FamilyPoly& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return {};
  FamilyPoly a = a_in;
  FamilyPoly b = b_in;
  EpsPoly s(GaussianRational(1));
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (odd(a.degree().value()) && odd(b.degree().value())) s = -s;
  }
  if (b.degree() == 0) return s * eps_pow(b.leading(), a.degree().value());

  const EpsPoly ca = content(a);
  const EpsPoly cb = content(b);
  const EpsPoly t = eps_pow(ca, b.degree().value()) * eps_pow(cb, a.degree().value());
  a = divide_coeffs(a, ca);
  b = divide_coeffs(b, cb);
  EpsPoly g(GaussianRational(1));
  EpsPoly h(GaussianRational(1));
  while (true) {
    const std::size_t da = a.degree().value();
    const std::size_t db = b.degree().value();
    const std::size_t delta = da - db;
    if (odd(da) && odd(db)) s = -s;
    FamilyPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = divide_coeffs(r, g * eps_pow(h, delta));
    g = a.leading();
    if (delta > 0) h = exact_quotient(eps_pow(g, delta), eps_pow(h, delta - 1));
    if (b.is_zero()) return {};
    if (b.degree() == 0) {
      const std::size_t dA = a.degree().value();
      h = exact_quotient(eps_pow(b.leading(), dA), eps_pow(h, dA - 1));
      return s * t * h;
    }
  }
}

EpsPoly discriminant(const FamilyPoly& p) {
  if (p.is_constant()) throw DomainError("discriminant needs degree >= 1");
  const std::size_t n = p.degree().value();
  EpsPoly r = exact_quotient(resultant(p, derivative(p)), p.leading());
  return (n * (n - 1) / 2) % 2 == 0 ? r : -r;
}

// ---------------------------------------------------------------------------

namespace {

class DegeneracyLog {
 public:
  void record(const EpsPoly& e) {
    if (e.is_constant()) return;
    polys_.push_back(squarefree_part(e));
  }

  std::vector<EpsPoly> finish() const {
    std::vector<EpsPoly> out;
    for (const auto& p : polys_) {
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
    return out;
  }

 private:
  std::vector<EpsPoly> polys_;
};

// gcd over Q(i)(eps)[lambda] of two nonzero polynomials, returned primitive,
// by the primitive remainder sequence.
FamilyPoly primitive_prs_gcd(FamilyPoly a, FamilyPoly b, DegeneracyLog& log) {
  if (a.degree() < b.degree()) std::swap(a, b);
  while (true) {
    if (b.degree() == 0) {
      log.record(b.leading());
      return FamilyPoly(EpsPoly(GaussianRational(1)));
    }
    log.record(b.leading());
    FamilyPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) return b;
    const EpsPoly c = content(r);
    log.record(c);
    a = std::move(b);
    b = divide_coeffs(r, c);
  }
}

Poly<GRatFunc> to_ratfunc_coeffs(const FamilyPoly& p) {
  return map_coeffs(p, [](const EpsPoly& c) { return GRatFunc(c); });
}

std::size_t eps_size(const FamilyPoly& p) {
  std::size_t s = 0;
  for (const auto& c : p.coeffs()) s += c.coeffs().size();
  return s;
}

}  // namespace

GenericMinimalPolynomial generic_minimal_polynomial(const ParamMatrix& m) {
  auto [p, adj] = charpoly_and_adjugate(m);
  const std::size_t n = m.dim();

  std::vector<FamilyPoly> entries;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      FamilyPoly e = adj.entry(i, j);
      if (!e.is_zero()) entries.push_back(std::move(e));
    }
  }
  // Low lambda-degree entries first: a constant entry settles d = 1 at once.
  std::stable_sort(entries.begin(), entries.end(), [](const FamilyPoly& x, const FamilyPoly& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return eps_size(x) < eps_size(y);
  });

  DegeneracyLog log;
  FamilyPoly running;
  for (const auto& e : entries) {
    const EpsPoly c = content(e);
    log.record(c);
    FamilyPoly prim = divide_coeffs(e, c);
    running = running.is_zero() ? std::move(prim) : primitive_prs_gcd(running, prim, log);
    if (running.degree() == 0) {
      running = FamilyPoly(EpsPoly(GaussianRational(1)));
      break;
    }
  }
  if (running.is_zero()) throw InvariantViolation("adjugate of lambda*E - M has no nonzero entry");
  log.record(running.leading());

  GenericMinimalPolynomial out;
  out.d = monic(to_ratfunc_coeffs(running));
  out.m = exact_quotient(to_ratfunc_coeffs(p), out.d);
  out.m_polynomial = map_coeffs(out.m, [](const GRatFunc& c) {
    if (!c.is_polynomial()) throw InvariantViolation("monic factor of the characteristic polynomial has a non-polynomial coefficient");
    return exact_quotient(c.num(), c.den());
  });
  out.degeneracy_polys = log.finish();
  return out;
}

DiagnosisReport pointwise_verdict(const ParamMatrix& m, const BigRational& eps0, const std::optional<ParitySpec>& parity) {
  DiagnosisReport report = diagnose(specialize(m, eps0), parity);
  report.parameter = eps0;
  return report;
}

namespace {

// Real parameters where a complex-coefficient polynomial vanishes are the
// common real roots of its real and imaginary parts.
QPoly real_zero_polynomial(const EpsPoly& e) {
  const QPoly re = real_part(e);
  const QPoly im = imag_part(e);
  if (re.is_zero() && im.is_zero()) return {};
  return poly_gcd(re, im);
}

}  // namespace

ExceptionalLocus exceptional_locus(const ParamMatrix& m, const BigRational& isolate_width,
                                   const std::optional<ParitySpec>& parity) {
  return exceptional_locus(m, generic_minimal_polynomial(m), isolate_width, parity);
}

ExceptionalLocus exceptional_locus(const ParamMatrix& m, const GenericMinimalPolynomial& generic,
                                   const BigRational& isolate_width, const std::optional<ParitySpec>& parity) {
  if (isolate_width.sign() <= 0) throw DomainError("isolation width must be positive");
  ExceptionalLocus out;
  out.degeneracy_polys = generic.degeneracy_polys;

  const EpsPoly disc = discriminant(generic.m_polynomial);
  if (disc.is_zero()) {
    out.generically_defective = true;
  } else {
    const QPoly real = real_zero_polynomial(disc);
    out.locus = real.is_constant() ? QPoly(BigRational(1)) : squarefree_part(real);
  }

  // Real roots of the degeneracy polynomials not already on the locus.
  QPoly extra(BigRational(1));
  for (const auto& g : generic.degeneracy_polys) {
    const QPoly real = real_zero_polynomial(g);
    if (!real.is_constant()) extra = extra * real;
  }
  if (!extra.is_constant()) {
    extra = squarefree_part(extra);
    if (!out.locus.is_zero() && !out.locus.is_constant()) extra = exact_quotient(extra, poly_gcd(extra, out.locus));
  }

  std::set<BigRational> tested;
  auto classify = [&](const QPoly& poly, const RootInterval& iv, CandidateSource source) {
    if (auto root = exact_rational_root(poly, iv)) {
      if (!tested.insert(*root).second) return;
      DiagnosisReport report = pointwise_verdict(m, *root, parity);
      if (report.diagonalizable()) {
        out.cleared_candidates.push_back(*root);
      } else {
        out.confirmed_defective.push_back({*root, source, std::move(report)});
      }
    } else {
      out.unconfirmed_candidates.push_back({iv, source});
    }
  };

  if (!out.locus.is_zero() && !out.locus.is_constant()) {
    out.real_root_intervals = isolate_real_roots(out.locus, isolate_width);
    for (const auto& iv : out.real_root_intervals) classify(out.locus, iv, CandidateSource::locus);
  }
  if (!extra.is_constant()) {
    for (const auto& iv : isolate_real_roots(extra, isolate_width)) classify(extra, iv, CandidateSource::degeneracy);
  }
  std::sort(out.confirmed_defective.begin(), out.confirmed_defective.end(),
            [](const ConfirmedPoint& a, const ConfirmedPoint& b) { return a.eps < b.eps; });
  std::sort(out.cleared_candidates.begin(), out.cleared_candidates.end());
  return out;
}

std::vector<RegionCensus> region_census(const ParamMatrix& m, std::span<const BigRational> samples) {
  const FamilyPoly p = family_charpoly(m);
  for (const auto& c : p.coeffs()) {
    if (!is_real(c)) {
      throw DomainError("region census needs a characteristic polynomial with real coefficients");
    }
  }
  auto one = [&m, &p](const BigRational& eps0) {
    RegionCensus rc;
    rc.sample = eps0;
    const QPoly p0 = real_part(specialize(p, eps0));
    const QPoly sqfree = squarefree_part(p0);
    const std::size_t distinct = sqfree.degree().value();
    rc.n_real = sturm_count_real_roots(sqfree);
    rc.n_complex_pairs = (distinct - rc.n_real) / 2;
    rc.defective_at_sample = !pointwise_verdict(m, eps0).diagonalizable();
    return rc;
  };
  std::vector<std::future<RegionCensus>> pending;
  pending.reserve(samples.size());
  for (const auto& s : samples) pending.push_back(std::async(std::launch::async, one, s));
  std::vector<RegionCensus> out;
  out.reserve(samples.size());
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

}  // namespace ptdiag
