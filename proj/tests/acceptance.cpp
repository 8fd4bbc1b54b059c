// One PASS/FAIL line per acceptance criterion, with the runtime limit checked
// for each. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "ptdiag/diag_test.hpp"
#include "ptdiag/entry_parser.hpp"
#include "ptdiag/param_family.hpp"
#include "ptdiag/problem_file.hpp"
#include "property_suites.hpp"
#include "test_support.hpp"

using namespace ptdiag;
using ptdiag::test::g;
using ptdiag::test::gpoly;
using ptdiag::test::q;
using ptdiag::test::qpoly;

namespace {

// Failed checks are collected as text; a criterion passes when none failed.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failed_.push_back(what);
  }
  bool ok() const { return failed_.empty(); }
  std::string summary() const {
    std::string s;
    for (const auto& f : failed_) s += (s.empty() ? "" : "; ") + f;
    return s;
  }

 private:
  std::vector<std::string> failed_;
};

std::string problem(const std::string& name) { return std::string(PTDIAG_SOURCE_DIR) + "/problems/" + name; }

bool run_criterion(int number, const std::string& title, double limit_seconds,
                   const std::function<void(Checks&)>& body) {
  Checks checks;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(checks);
  } catch (const std::exception& e) {
    checks.expect(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  checks.expect(seconds < limit_seconds, "runtime limit " + std::to_string(limit_seconds) + " s exceeded");
  std::ostringstream line;
  line << (checks.ok() ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " (" << std::fixed
       << std::setprecision(3) << seconds << " s, limit " << std::setprecision(0) << limit_seconds << " s)";
  if (!checks.ok()) line << " -- " << checks.summary();
  std::cout << line.str() << std::endl;
  return checks.ok();
}

GMatrix matrix_b(long b) {
  return GMatrix(3, std::vector<GaussianRational>{g(1), g(b), g(0), g(0), g(1), g(0), g(0), g(0), g(2)});
}

void criterion_matrix_a(Checks& c) {
  const DiagnosisReport r = diagnose(load_problem(problem("matrix_a.json")).numeric_matrix());
  c.expect(r.char_poly == pow(gpoly({-1, 1}), 2) * gpoly({-2, 1}), "p != (λ-1)^2 (λ-2)");
  c.expect(r.d_poly == gpoly({-1, 1}), "d != λ-1");
  c.expect(r.min_poly == gpoly({-1, 1}) * gpoly({-2, 1}), "m != (λ-1)(λ-2)");
  c.expect(r.verdict == Verdict::diagonalizable, "verdict not diagonalizable");
}

void criterion_matrix_b(Checks& c) {
  const GPoly p = pow(gpoly({-1, 1}), 2) * gpoly({-2, 1});
  const DiagnosisReport b1 = diagnose(load_problem(problem("matrix_b.json")).numeric_matrix());
  c.expect(b1.char_poly == p && b1.min_poly == p, "b = 1: m != p = (λ-1)^2 (λ-2)");
  c.expect(b1.d_poly == gpoly({1}), "b = 1: d != 1");
  c.expect(b1.verdict == Verdict::defective, "b = 1: verdict not defective");
  for (long b : {-2, 3}) c.expect(!diagnose(matrix_b(b)).diagonalizable(), "b = " + std::to_string(b) + " not defective");
  const DiagnosisReport b0 = diagnose(load_problem(problem("matrix_b_zero.json")).numeric_matrix());
  c.expect(b0.verdict == Verdict::diagonalizable, "b = 0: verdict not diagonalizable");
  c.expect(b0.d_poly == gpoly({-1, 1}), "b = 0: d != λ-1");
  c.expect(diagnose(matrix_b(0)).d_poly == gpoly({-1, 1}), "b = 0 (constructed): d != λ-1");
}

void criterion_pt_grid(Checks& c) {
  const ParitySpec sx = ParitySpec::anti_diagonal(2);
  std::size_t points = 0, defective = 0;
  for (long a1 = -2; a1 <= 2; ++a1) {
    for (long a2 = -2; a2 <= 2; ++a2) {
      for (long b1 = -2; b1 <= 2; ++b1) {
        for (long b2 = -2; b2 <= 2; ++b2) {
          const GaussianRational a(q(a1, 2), q(a2, 2)), b(q(b1, 2), q(b2, 2));
          const GMatrix h(2, std::vector<GaussianRational>{a, b, b.conj(), a.conj()});
          const DiagnosisReport r = diagnose(h, sx);
          const bool expected = a.im() * a.im() == b.abs2() && (!a.im().is_zero() || !b.is_zero());
          const std::string at = "a = " + a.to_string() + ", b = " + b.to_string();
          c.expect(r.diagonalizable() == !expected, "verdict mismatch at " + at);
          c.expect(r.diagonalizable() == oracle_diagonalizable(h), "oracle disagreement at " + at);
          ++points;
          defective += r.diagonalizable() ? 0 : 1;
        }
      }
    }
  }
  c.expect(points == 625, "grid size " + std::to_string(points));
  c.expect(defective > 0, "no defective grid point");
}

ParamMatrix family_4x4() { return load_problem(problem("family_4x4.json")).family(); }

void criterion_four_by_four(Checks& c) {
  const ParamMatrix h = family_4x4();
  const ExceptionalLocus l = exceptional_locus(h, kDefaultIsolationWidth, ParitySpec::anti_diagonal(4));
  c.expect(l.locus == qpoly({1, 0, -3, 0, 1}), "locus != eps^4 - 3 eps^2 + 1");
  c.expect(sturm_count_real_roots(l.locus) == 4, "Sturm count != 4");
  const std::vector<BigRational> samples{q(0), q(1, 2), q(1), q(2)};
  const auto census = region_census(h, samples);
  const std::size_t real[] = {4, 4, 2, 0}, pairs[] = {0, 0, 1, 2};
  for (std::size_t k = 0; k < 4; ++k) {
    c.expect(census[k].n_real == real[k] && census[k].n_complex_pairs == pairs[k],
             "census at eps = " + samples[k].to_string() + ": " + std::to_string(census[k].n_real) + " real, " +
                 std::to_string(census[k].n_complex_pairs) + " pairs");
  }
}

void criterion_two_by_two_family(Checks& c) {
  const ParamMatrix m = load_problem(problem("family_2x2.json")).family();
  const ExceptionalLocus l = exceptional_locus(m);
  c.expect(l.locus == qpoly({-1, 0, 1}), "locus != eps^2 - 1");
  c.expect(l.confirmed_defective.size() == 2, "expected two confirmed points");
  if (l.confirmed_defective.size() == 2) {
    c.expect(l.confirmed_defective[0].eps == q(-1) && l.confirmed_defective[1].eps == q(1),
             "confirmed points are not -1, 1");
    for (const auto& p : l.confirmed_defective) {
      c.expect(p.report.min_poly == gpoly({0, 0, 1}), "m != λ^2 at eps = " + p.eps.to_string());
      c.expect(p.report.witness == gpoly({0, 1}), "witness != λ at eps = " + p.eps.to_string());
    }
  }
  c.expect(l.unconfirmed_candidates.empty(), "unexpected unconfirmed candidates");
}

void criterion_properties(Checks& c) {
  using namespace ptdiag::test;
  constexpr std::size_t kCases = 500;
  const std::pair<const char*, SuiteResult (*)(std::uint64_t, std::size_t)> suites[] = {
      {"(a) adjugate identity", suite_adjugate_identity},
      {"(b) m(M) = 0 and p = d m", suite_minimal_polynomial},
      {"(c) verdict matches oracle", suite_oracle_agreement},
      {"(d) PT inputs give real p, d, m", suite_pt_realness},
      {"(e) hermitean never defective", suite_hermitean},
      {"(f) Sturm counts match factorizations", suite_sturm_counts},
  };
  std::uint64_t seed = 2024;
  for (const auto& [name, run] : suites) {
    const SuiteResult r = run(seed++, kCases);
    std::cout << "  suite " << name << ": " << r.cases << " cases, " << r.failures << " failures" << std::endl;
    c.expect(r.cases >= kCases, std::string(name) + ": too few cases");
    c.expect(r.failures == 0, std::string(name) + ": " + r.first_failure);
  }
}

void criterion_unconfirmed(Checks& c) {
  const ExceptionalLocus l = exceptional_locus(family_4x4());
  const auto numeric = ptdiag::test::numeric_real_roots(l.locus);
  c.expect(numeric.size() == 4, "numeric oracle did not find four real roots");
  c.expect(l.confirmed_defective.empty() && l.cleared_candidates.empty(), "irrational roots were given a verdict");
  c.expect(l.unconfirmed_candidates.size() == 4, "expected four unconfirmed candidates");
  if (numeric.size() != 4 || l.unconfirmed_candidates.size() != 4) return;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& cand = l.unconfirmed_candidates[k];
    c.expect(cand.source == CandidateSource::locus, "candidate not from locus");
    c.expect(cand.interval.width() <= q(1, 1024), "interval wider than 1/1024");
    c.expect(ptdiag::test::to_double(cand.interval.lo) <= numeric[k] &&
                 numeric[k] <= ptdiag::test::to_double(cand.interval.hi),
             "interval " + std::to_string(k) + " misses numeric root " + std::to_string(numeric[k]));
  }
  const double golden = (1 + std::sqrt(5.0)) / 2;
  c.expect(std::abs(std::abs(numeric[0]) - golden) < 1e-9 && std::abs(numeric[2] - 1 / golden) < 1e-9,
           "numeric oracle roots are not ±0.618..., ±1.618...");
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run_criterion(1, "matrix A diag(1,1,2): p, d, m exact, diagonalizable", 1, criterion_matrix_a);
  ok &= run_criterion(2, "matrix B: defective for b = 1, diagonalizable with d = λ-1 for b = 0", 1, criterion_matrix_b);
  ok &= run_criterion(3, "2x2 PT grid (625 points): defective set and oracle agreement", 10, criterion_pt_grid);
  ok &= run_criterion(4, "4x4 family s = δ = 1: locus, Sturm count, census", 5, criterion_four_by_four);
  ok &= run_criterion(5, "2x2 family [[iε,1],[1,-iε]]: locus ε^2 - 1, confirmed ±1 with m = λ^2", 1,
                      criterion_two_by_two_family);
  ok &= run_criterion(6, "property suites (a)-(f), 500 cases each, N <= 5", 60, criterion_properties);
  ok &= run_criterion(7, "irrational locus roots reported as unconfirmed, width <= 1/1024", 5, criterion_unconfirmed);
  return ok ? 0 : 1;
}
