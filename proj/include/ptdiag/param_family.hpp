#pragma once

// One-parameter matrix families M(eps) with eps real: generic minimal
// polynomial over Q(i)(eps), the exceptional-point locus in eps, pointwise
// confirmation at rational parameters, and a real/complex eigenvalue census.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ptdiag/diag_test.hpp"
#include "ptdiag/matrix.hpp"
#include "ptdiag/parity.hpp"
#include "ptdiag/poly.hpp"
#include "ptdiag/ratfunc.hpp"
#include "ptdiag/sturm.hpp"

namespace ptdiag {

// Polynomial in eps with Q(i) coefficients.
using EpsPoly = GPoly;
using ParamMatrix = Matrix<EpsPoly>;
// Polynomial in lambda whose coefficients are polynomials in eps.
using FamilyPoly = Poly<EpsPoly>;

FamilyPoly family_charpoly(const ParamMatrix& m);

GMatrix specialize(const ParamMatrix& m, const BigRational& eps0);
GPoly specialize(const FamilyPoly& p, const BigRational& eps0);

// --- Primitive and subresultant remainder sequences over Q(i)[eps][lambda].

// Monic gcd of the eps-polynomial coefficients; zero for p = 0.
EpsPoly content(const FamilyPoly& p);
FamilyPoly primitive_part(const FamilyPoly& p);
// lc(b)^(deg a - deg b + 1) * a mod b, computed without leaving the ring.
FamilyPoly pseudo_remainder(const FamilyPoly& a, const FamilyPoly& b);
// Resultant in lambda by the subresultant algorithm.
EpsPoly resultant(const FamilyPoly& a, const FamilyPoly& b);
// disc(p) = (-1)^(n(n-1)/2) res(p, p') / lc(p). Requires deg p >= 1.
EpsPoly discriminant(const FamilyPoly& p);

struct GenericMinimalPolynomial {
  Poly<GRatFunc> d;
  Poly<GRatFunc> m;
  // m again: monic in lambda, so its coefficients are polynomials in eps.
  FamilyPoly m_polynomial;
  // Monic square-free eps-polynomials whose vanishing invalidates a division
  // or leading-coefficient assumption made while computing d.
  std::vector<EpsPoly> degeneracy_polys;
};

GenericMinimalPolynomial generic_minimal_polynomial(const ParamMatrix& m);

enum class CandidateSource { locus, degeneracy };

struct Candidate {
  RootInterval interval;
  CandidateSource source;
};

struct ConfirmedPoint {
  BigRational eps;
  CandidateSource source;
  DiagnosisReport report;
};

struct ExceptionalLocus {
  // Monic square-free real part of disc(m_generic); zero when m_generic is
  // itself not square-free (the family is defective for generic eps).
  QPoly locus;
  bool generically_defective = false;
  std::vector<EpsPoly> degeneracy_polys;
  std::vector<RootInterval> real_root_intervals;
  std::vector<ConfirmedPoint> confirmed_defective;
  // Rational candidates at which the pointwise test found a diagonalizable matrix.
  std::vector<BigRational> cleared_candidates;
  // Irrational candidates; exact confirmation would need algebraic numbers.
  std::vector<Candidate> unconfirmed_candidates;
};

inline const BigRational kDefaultIsolationWidth{BigInt(1), BigInt(1024)};

ExceptionalLocus exceptional_locus(const ParamMatrix& m, const BigRational& isolate_width = kDefaultIsolationWidth,
                                   const std::optional<ParitySpec>& parity = std::nullopt);
// Same, reusing an already computed generic minimal polynomial of m.
ExceptionalLocus exceptional_locus(const ParamMatrix& m, const GenericMinimalPolynomial& generic,
                                   const BigRational& isolate_width = kDefaultIsolationWidth,
                                   const std::optional<ParitySpec>& parity = std::nullopt);

DiagnosisReport pointwise_verdict(const ParamMatrix& m, const BigRational& eps0,
                                  const std::optional<ParitySpec>& parity = std::nullopt);

struct RegionCensus {
  BigRational sample;
  std::size_t n_real = 0;
  std::size_t n_complex_pairs = 0;
  bool defective_at_sample = false;
};

// Samples are independent and evaluated concurrently. Throws DomainError if
// the family characteristic polynomial has a non-real coefficient.
std::vector<RegionCensus> region_census(const ParamMatrix& m, std::span<const BigRational> samples);

}  // namespace ptdiag
