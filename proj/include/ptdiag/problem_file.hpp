#pragma once

// JSON problem files:
//
//   {
//     "dim": 2,
//     "mode": "numeric" | "parametric",     optional, inferred from entries
//     "entries": [["i", "1"], ["1", "-i"]],
//     "parity": [["0", "1"], ["1", "0"]],    optional
//     "samples": ["0", "1/2"],               optional census points
//     "isolate_width": "1/1024"              optional
//   }

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptdiag/param_family.hpp"
#include "ptdiag/parity.hpp"

namespace ptdiag {

enum class ProblemMode { numeric, parametric };

struct ProblemFile {
  std::size_t dim = 0;
  ProblemMode mode = ProblemMode::numeric;
  std::vector<std::vector<std::string>> entries;
  std::optional<std::vector<std::vector<std::string>>> parity;
  std::vector<BigRational> samples;
  std::optional<BigRational> isolate_width;

  ParamMatrix family() const;
  // Throws InputError for a parametric problem.
  GMatrix numeric_matrix() const;
  // Throws InputError if absent, eps-dependent or not an involution.
  ParitySpec parity_spec() const;
};

// Throws InputError (or ParseError) describing the first problem found.
ProblemFile parse_problem(std::string_view json_text);
ProblemFile load_problem(const std::filesystem::path& path);

// Comma-separated rationals, e.g. "0,1/2,-3".
std::vector<BigRational> parse_rational_list(std::string_view text);

}  // namespace ptdiag
