#include "ptdiag/report.hpp"

#include <sstream>

#include "ptdiag/format.hpp"

namespace ptdiag {

using nlohmann::json;

namespace {

constexpr std::string_view kLambda = "λ";

// Parenthesized when the polynomial has more than one term.
template <Ring R>
std::string lambda_text(const Poly<R>& p) {
  std::size_t terms = 0;
  for (const auto& c : p.coeffs()) {
    if (!(c == R{})) ++terms;
  }
  const std::string s = format_poly(p, kLambda);
  return terms > 1 ? "(" + s + ")" : s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string approx(const BigRational& q) { return q.to_decimal(6); }

std::string interval_text(const RootInterval& iv) {
  if (iv.is_exact()) return "[" + iv.lo.to_string() + "] (exact)";
  return format_interval(iv) + " ~ " + approx((iv.lo + iv.hi) / BigRational(2));
}

std::string eps_text(const EpsPoly& p) { return format_poly(p, "eps"); }

void diagnosis_lines(std::ostringstream& os, const DiagnosisReport& r, const std::string& indent) {
  if (r.parameter) os << indent << "eps: " << r.parameter->to_string() << '\n';
  os << indent << "dim: " << r.dim << '\n';
  os << indent << "p: " << lambda_text(r.char_poly) << '\n';
  os << indent << "d: " << lambda_text(r.d_poly) << '\n';
  os << indent << "m: " << lambda_text(r.min_poly) << '\n';
  os << indent << "p = d * m check: " << (r.char_poly == r.d_poly * r.min_poly ? "ok" : "FAILED") << '\n';
  os << indent << "witness gcd: " << lambda_text(r.witness) << '\n';
  os << indent << "pt_status: " << to_string(r.pt_status) << '\n';
  os << indent << "real coefficients: " << yes_no(r.realness_ok) << '\n';
  if (r.diagonalizable()) {
    os << indent << "verdict: diagonalizable, m = " << lambda_text(r.min_poly) << '\n';
  } else {
    os << indent << "verdict: defective, witness gcd = " << lambda_text(r.witness) << '\n';
  }
}

void locus_lines(std::ostringstream& os, const ExceptionalLocus& l) {
  if (l.generically_defective) {
    os << "locus: 0 (defective for every eps)\n";
  } else if (l.locus.is_constant()) {
    os << "locus: 1 (no exceptional candidates)\n";
  } else {
    os << "locus: " << format_poly(l.locus, "eps") << '\n';
    os << "locus real roots: " << l.real_root_intervals.size() << '\n';
    for (const auto& iv : l.real_root_intervals) os << "  " << interval_text(iv) << '\n';
  }
  os << "degeneracy polynomials: " << (l.degeneracy_polys.empty() ? "none" : std::to_string(l.degeneracy_polys.size()))
     << '\n';
  for (const auto& g : l.degeneracy_polys) os << "  " << eps_text(g) << '\n';
  os << "confirmed defective: " << (l.confirmed_defective.empty() ? "none" : std::to_string(l.confirmed_defective.size()))
     << '\n';
  for (const auto& c : l.confirmed_defective) {
    os << "  eps = " << c.eps.to_string() << " (" << to_string(c.source) << "): m = " << lambda_text(c.report.min_poly)
       << ", witness gcd = " << lambda_text(c.report.witness) << '\n';
  }
  os << "cleared candidates: " << (l.cleared_candidates.empty() ? "none" : std::to_string(l.cleared_candidates.size()))
     << '\n';
  for (const auto& q : l.cleared_candidates) os << "  eps = " << q.to_string() << '\n';
  os << "unconfirmed candidates: "
     << (l.unconfirmed_candidates.empty() ? "none" : std::to_string(l.unconfirmed_candidates.size())) << '\n';
  for (const auto& c : l.unconfirmed_candidates) {
    os << "  " << interval_text(c.interval) << " (" << to_string(c.source) << ")\n";
  }
}

void census_lines(std::ostringstream& os, std::span<const RegionCensus> census) {
  os << "census: " << census.size() << " samples\n";
  for (const auto& c : census) {
    os << "  eps = " << c.sample.to_string() << ": n_real: " << c.n_real << ", complex_pairs: " << c.n_complex_pairs
       << ", defective: " << yes_no(c.defective_at_sample) << '\n';
  }
}

template <class T>
json poly_json(const Poly<T>& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string_view to_string(CandidateSource s) { return s == CandidateSource::locus ? "locus" : "degeneracy"; }

json to_json(const BigRational& q) { return q.to_string(); }

json to_json(const GaussianRational& z) { return {{"re", z.re().to_string()}, {"im", z.im().to_string()}}; }

json to_json(const QPoly& p) { return poly_json(p); }
json to_json(const GPoly& p) { return poly_json(p); }
json to_json(const FamilyPoly& p) { return poly_json(p); }

json to_json(const RootInterval& iv) { return {{"lo", iv.lo.to_string()}, {"hi", iv.hi.to_string()}}; }

json to_json(const DiagnosisReport& r) {
  json j;
  j["kind"] = "diagnosis";
  j["dim"] = r.dim;
  if (r.parameter) j["eps"] = r.parameter->to_string();
  j["char_poly"] = to_json(r.char_poly);
  j["d"] = to_json(r.d_poly);
  j["min_poly"] = to_json(r.min_poly);
  j["witness"] = to_json(r.witness);
  j["char_poly_text"] = format_poly(r.char_poly, kLambda);
  j["d_text"] = format_poly(r.d_poly, kLambda);
  j["min_poly_text"] = format_poly(r.min_poly, kLambda);
  j["witness_text"] = format_poly(r.witness, kLambda);
  j["product_check"] = r.char_poly == r.d_poly * r.min_poly;
  j["verdict"] = std::string(to_string(r.verdict));
  j["pt_status"] = std::string(to_string(r.pt_status));
  j["realness_ok"] = r.realness_ok;
  return j;
}

json to_json(const ExceptionalLocus& l) {
  json j;
  j["locus"] = format_poly(l.locus, "eps");
  j["locus_coeffs"] = to_json(l.locus);
  j["generically_defective"] = l.generically_defective;
  j["degeneracy_polys"] = json::array();
  for (const auto& g : l.degeneracy_polys) {
    j["degeneracy_polys"].push_back({{"text", eps_text(g)}, {"coeffs", to_json(g)}});
  }
  j["real_root_intervals"] = json::array();
  for (const auto& iv : l.real_root_intervals) j["real_root_intervals"].push_back(to_json(iv));
  j["confirmed_defective"] = json::array();
  for (const auto& c : l.confirmed_defective) {
    j["confirmed_defective"].push_back({{"eps", c.eps.to_string()},
                                        {"source", std::string(to_string(c.source))},
                                        {"min_poly", to_json(c.report.min_poly)},
                                        {"witness", to_json(c.report.witness)}});
  }
  j["cleared_candidates"] = json::array();
  for (const auto& q : l.cleared_candidates) j["cleared_candidates"].push_back(q.to_string());
  j["unconfirmed_candidates"] = json::array();
  for (const auto& c : l.unconfirmed_candidates) {
    json e = to_json(c.interval);
    e["source"] = std::string(to_string(c.source));
    j["unconfirmed_candidates"].push_back(std::move(e));
  }
  return j;
}

json to_json(std::span<const RegionCensus> census) {
  json arr = json::array();
  for (const auto& c : census) {
    arr.push_back({{"eps", c.sample.to_string()},
                   {"n_real", c.n_real},
                   {"complex_pairs", c.n_complex_pairs},
                   {"defective", c.defective_at_sample}});
  }
  return arr;
}

std::string render_report(const DiagnosisReport& r, ReportFormat format) {
  if (format == ReportFormat::json) return dump(to_json(r));
  std::ostringstream os;
  diagnosis_lines(os, r, "");
  return os.str();
}

std::string render_report(const ExceptionalLocus& l, ReportFormat format) {
  if (format == ReportFormat::json) return dump(to_json(l));
  std::ostringstream os;
  locus_lines(os, l);
  return os.str();
}

std::string render_report(std::span<const RegionCensus> census, ReportFormat format) {
  if (format == ReportFormat::json) return dump(to_json(census));
  std::ostringstream os;
  census_lines(os, census);
  return os.str();
}

std::string render_report(const FamilyAnalysis& a, ReportFormat format) {
  if (format == ReportFormat::json) {
    json j = to_json(a.locus);
    j["kind"] = "family";
    j["dim"] = a.dim;
    j["pt_status"] = std::string(to_string(a.pt_status));
    j["char_poly"] = to_json(a.char_poly);
    j["char_poly_text"] = format_poly(a.char_poly, kLambda);
    j["generic_min_poly"] = to_json(a.generic.m_polynomial);
    j["generic_min_poly_text"] = format_poly(a.generic.m_polynomial, kLambda);
    j["generic_d_text"] = format_poly(a.generic.d, kLambda);
    if (a.census) j["census"] = to_json(std::span<const RegionCensus>(*a.census));
    return dump(j);
  }
  std::ostringstream os;
  os << "dim: " << a.dim << '\n';
  os << "pt_status: " << to_string(a.pt_status) << '\n';
  os << "p: " << lambda_text(a.char_poly) << '\n';
  os << "generic d: " << lambda_text(a.generic.d) << '\n';
  os << "generic m: " << lambda_text(a.generic.m_polynomial) << '\n';
  locus_lines(os, a.locus);
  if (a.census) census_lines(os, *a.census);
  return os.str();
}

std::string render_report(std::span<const OracleSample> samples, ReportFormat format) {
  std::size_t disagreements = 0;
  for (const auto& s : samples) disagreements += s.agrees() ? 0 : 1;
  if (format == ReportFormat::json) {
    json j;
    j["kind"] = "oracle";
    j["samples"] = json::array();
    for (const auto& s : samples) {
      json e;
      if (s.parameter) e["eps"] = s.parameter->to_string();
      e["verdict"] = std::string(to_string(s.verdict));
      e["oracle"] = s.oracle_diagonalizable ? "diagonalizable" : "defective";
      e["agree"] = s.agrees();
      j["samples"].push_back(std::move(e));
    }
    j["disagreements"] = disagreements;
    return dump(j);
  }
  std::ostringstream os;
  for (const auto& s : samples) {
    if (s.parameter) os << "eps = " << s.parameter->to_string() << ": ";
    os << "verdict: " << to_string(s.verdict)
       << ", oracle: " << (s.oracle_diagonalizable ? "diagonalizable" : "defective")
       << (s.agrees() ? ", agree" : ", DISAGREE") << '\n';
  }
  os << "disagreements: " << disagreements << '\n';
  return os.str();
}

}  // namespace ptdiag
