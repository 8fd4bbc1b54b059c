#pragma once

// Text and JSON rendering of analysis results. Text is line-oriented
// "key: value"; JSON carries every polynomial as a coefficient array in
// ascending powers, rationals as "p/q" strings and Gaussian rationals as
// {"re", "im"} objects.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "ptdiag/diag_test.hpp"
#include "ptdiag/param_family.hpp"

namespace ptdiag {

enum class ReportFormat { text, json };

nlohmann::json to_json(const BigRational& q);
nlohmann::json to_json(const GaussianRational& z);
nlohmann::json to_json(const QPoly& p);
nlohmann::json to_json(const GPoly& p);
nlohmann::json to_json(const FamilyPoly& p);
nlohmann::json to_json(const RootInterval& iv);
nlohmann::json to_json(const DiagnosisReport& r);
nlohmann::json to_json(const ExceptionalLocus& l);
nlohmann::json to_json(std::span<const RegionCensus> census);

std::string_view to_string(CandidateSource s);

std::string render_report(const DiagnosisReport& r, ReportFormat format);
std::string render_report(const ExceptionalLocus& l, ReportFormat format);
std::string render_report(std::span<const RegionCensus> census, ReportFormat format);

// Everything the 'family' command reports.
struct FamilyAnalysis {
  std::size_t dim = 0;
  PtStatus pt_status = PtStatus::not_checked;
  FamilyPoly char_poly;
  GenericMinimalPolynomial generic;
  ExceptionalLocus locus;
  std::optional<std::vector<RegionCensus>> census;
};

std::string render_report(const FamilyAnalysis& a, ReportFormat format);

struct OracleSample {
  std::optional<BigRational> parameter;
  Verdict verdict = Verdict::diagonalizable;
  bool oracle_diagonalizable = true;

  bool agrees() const { return (verdict == Verdict::diagonalizable) == oracle_diagonalizable; }
};

std::string render_report(std::span<const OracleSample> samples, ReportFormat format);

}  // namespace ptdiag
