#include "ptdiag/problem_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ptdiag/entry_parser.hpp"
#include "ptdiag/errors.hpp"

namespace ptdiag {

namespace {

using nlohmann::json;

std::vector<std::vector<std::string>> read_square(const json& j, std::size_t dim, const std::string& field) {
  if (!j.is_array() || j.size() != dim) {
    throw InputError("'" + field + "' must be an array of " + std::to_string(dim) + " rows");
  }
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < dim; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != dim) {
      throw InputError("'" + field + "' row " + std::to_string(i) + " must have " + std::to_string(dim) + " entries");
    }
    std::vector<std::string> out;
    for (const auto& cell : row) {
      if (cell.is_string()) {
        out.push_back(cell.get<std::string>());
      } else if (cell.is_number_integer()) {
        out.push_back(std::to_string(cell.get<long long>()));
      } else {
        throw InputError("'" + field + "' entries must be strings or integers");
      }
    }
    rows.push_back(std::move(out));
  }
  return rows;
}

BigRational read_rational(const json& j, const std::string& field) {
  if (j.is_string()) return BigRational::parse(j.get<std::string>());
  if (j.is_number_integer()) return BigRational(static_cast<long>(j.get<long long>()));
  throw InputError("'" + field + "' values must be rationals written as strings, e.g. \"1/2\"");
}

EpsPoly parse_cell(const std::string& src, const std::string& field, std::size_t i, std::size_t j) {
  try {
    return parse_eps_poly(src);
  } catch (const ParseError& e) {
    throw InputError(field + "[" + std::to_string(i) + "][" + std::to_string(j) + "] = \"" + src + "\": " + e.what());
  }
}

}  // namespace

ParamMatrix ProblemFile::family() const {
  ParamMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = parse_cell(entries[i][j], "entries", i, j);
  }
  return m;
}

GMatrix ProblemFile::numeric_matrix() const {
  if (mode == ProblemMode::parametric) throw InputError("problem is parametric; use the 'family' command");
  return map_entries(family(), [](const EpsPoly& e) { return e.coeff(0); });
}

ParitySpec ProblemFile::parity_spec() const {
  if (!parity) throw InputError("problem file has no 'parity' matrix");
  GMatrix p(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const EpsPoly e = parse_cell((*parity)[i][j], "parity", i, j);
      if (!e.is_constant()) throw InputError("parity entries must not depend on eps");
      p(i, j) = e.coeff(0);
    }
  }
  try {
    return ParitySpec(std::move(p));
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
}

ProblemFile parse_problem(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("problem file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("problem file must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    static const char* known[] = {"dim", "mode", "entries", "parity", "samples", "isolate_width"};
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      throw InputError("unknown field '" + key + "' in problem file");
    }
  }

  ProblemFile pf;
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 1) {
    throw InputError("'dim' must be a positive integer");
  }
  pf.dim = static_cast<std::size_t>(j["dim"].get<long long>());
  if (!j.contains("entries")) throw InputError("missing 'entries'");
  pf.entries = read_square(j["entries"], pf.dim, "entries");
  if (j.contains("parity")) pf.parity = read_square(j["parity"], pf.dim, "parity");

  bool mentions_eps = false;
  for (std::size_t r = 0; r < pf.dim; ++r) {
    for (std::size_t c = 0; c < pf.dim; ++c) {
      try {
        mentions_eps = parse_entry(pf.entries[r][c]).mentions_eps() || mentions_eps;
      } catch (const ParseError& e) {
        throw InputError("entries[" + std::to_string(r) + "][" + std::to_string(c) + "] = \"" + pf.entries[r][c] +
                         "\": " + e.what());
      }
    }
  }
  pf.mode = mentions_eps ? ProblemMode::parametric : ProblemMode::numeric;
  if (j.contains("mode")) {
    const std::string mode = j["mode"].is_string() ? j["mode"].get<std::string>() : "";
    if (mode != "numeric" && mode != "parametric") throw InputError("'mode' must be \"numeric\" or \"parametric\"");
    const ProblemMode declared = mode == "numeric" ? ProblemMode::numeric : ProblemMode::parametric;
    if (declared != pf.mode) {
      throw InputError(mentions_eps ? "mode is \"numeric\" but an entry mentions eps"
                                    : "mode is \"parametric\" but no entry mentions eps");
    }
  }
  if (j.contains("samples")) {
    if (!j["samples"].is_array()) throw InputError("'samples' must be an array");
    for (const auto& s : j["samples"]) pf.samples.push_back(read_rational(s, "samples"));
  }
  if (j.contains("isolate_width")) {
    pf.isolate_width = read_rational(j["isolate_width"], "isolate_width");
    if (pf.isolate_width->sign() <= 0) throw InputError("'isolate_width' must be positive");
  }
  if (pf.parity) (void)pf.parity_spec();
  return pf;
}

ProblemFile load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open problem file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

std::vector<BigRational> parse_rational_list(std::string_view text) {
  std::vector<BigRational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    std::string item(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    out.push_back(BigRational::parse(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace ptdiag
