#include "ptdiag/cli.hpp"

#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ptdiag/errors.hpp"
#include "ptdiag/problem_file.hpp"
#include "ptdiag/report.hpp"

namespace ptdiag {

namespace {

struct Options {
  std::string file;
  std::string format = "text";
  std::string samples;
  std::string isolate_width;
  std::string parity;
};

std::optional<ParitySpec> resolve_parity(const ProblemFile& pf, const std::string& mode) {
  if (mode == "none") return std::nullopt;
  if (mode == "file") return pf.parity_spec();
  if (mode == "default") return ParitySpec::anti_diagonal(pf.dim);
  if (pf.parity) return pf.parity_spec();
  return ParitySpec::anti_diagonal(pf.dim);
}

ReportFormat resolve_format(const std::string& f) { return f == "json" ? ReportFormat::json : ReportFormat::text; }

std::vector<BigRational> resolve_samples(const ProblemFile& pf, const Options& o) {
  return o.samples.empty() ? pf.samples : parse_rational_list(o.samples);
}

BigRational resolve_width(const ProblemFile& pf, const Options& o) {
  if (!o.isolate_width.empty()) {
    BigRational w = BigRational::parse(o.isolate_width);
    if (w.sign() <= 0) throw InputError("--isolate-width must be positive");
    return w;
  }
  return pf.isolate_width.value_or(kDefaultIsolationWidth);
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const ProblemFile pf = load_problem(o.file);
  const GMatrix m = pf.numeric_matrix();
  const DiagnosisReport r = diagnose(m, resolve_parity(pf, o.parity));
  out << render_report(r, resolve_format(o.format));
  return r.diagonalizable() ? kExitOk : kExitDefective;
}

int cmd_family(const Options& o, std::ostream& out) {
  const ProblemFile pf = load_problem(o.file);
  const ParamMatrix m = pf.family();
  const std::optional<ParitySpec> parity = resolve_parity(pf, o.parity);
  FamilyAnalysis a;
  a.dim = m.dim();
  a.pt_status = !parity ? PtStatus::not_checked
                        : (pt_invariance_check(m, *parity) ? PtStatus::pt_invariant : PtStatus::not_pt);
  a.char_poly = family_charpoly(m);
  a.generic = generic_minimal_polynomial(m);
  a.locus = exceptional_locus(m, a.generic, resolve_width(pf, o), parity);
  const std::vector<BigRational> samples = resolve_samples(pf, o);
  if (!samples.empty()) a.census = region_census(m, samples);
  out << render_report(a, resolve_format(o.format));
  return kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const ProblemFile pf = load_problem(o.file);
  const std::optional<ParitySpec> parity = resolve_parity(pf, o.parity);
  std::vector<OracleSample> samples;
  auto check = [&](const GMatrix& m, std::optional<BigRational> eps0) {
    const DiagnosisReport r = diagnose(m, parity);
    samples.push_back({std::move(eps0), r.verdict, oracle_diagonalizable(m)});
  };
  if (pf.mode == ProblemMode::numeric) {
    check(pf.numeric_matrix(), std::nullopt);
  } else {
    const std::vector<BigRational> eps = resolve_samples(pf, o);
    if (eps.empty()) throw InputError("oracle on a parametric problem needs --samples or 'samples' in the file");
    const ParamMatrix m = pf.family();
    for (const auto& e : eps) check(specialize(m, e), e);
  }
  out << render_report(samples, resolve_format(o.format));
  for (const auto& s : samples) {
    if (!s.agrees()) return kExitInvariant;
  }
  if (pf.mode == ProblemMode::numeric && samples.front().verdict == Verdict::defective) return kExitDefective;
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact diagonalizability and exceptional-point analysis of matrices over Q(i)", "ptdiag"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("file", o.file, "problem file (JSON)")->required();
    sub->add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--parity", o.parity, "parity operator: default (anti-diagonal), none, or file")
        ->check(CLI::IsMember({"default", "none", "file"}));
  };
  CLI::App* analyze = app.add_subcommand("analyze", "diagnose a numeric matrix");
  add_common(analyze);
  CLI::App* family = app.add_subcommand("family", "exceptional locus of a one-parameter family");
  add_common(family);
  family->add_option("--samples", o.samples, "census points, e.g. 0,1/2,2");
  family->add_option("--isolate-width", o.isolate_width, "maximum root interval width (default 1/1024)");
  CLI::App* oracle = app.add_subcommand("oracle", "cross-check the verdict against the independent oracle");
  add_common(oracle);
  oracle->add_option("--samples", o.samples, "parameter values for a parametric problem");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitInputError;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (family->parsed()) return cmd_family(o, out);
    return cmd_oracle(o, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
}

}  // namespace ptdiag
