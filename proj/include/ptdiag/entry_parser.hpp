#pragma once

// Matrix entry expressions:
//
//   expr     := term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := '-' factor | atom ('^' uint)?
//   atom     := rational | 'i' | 'eps' | '(' expr ')'
//   rational := int ('/' uint)?
//
// Whitespace is insignificant and multiplication is always explicit. Unary
// minus binds looser than '^', so "-eps^2" is -(eps^2).

#include <memory>
#include <string>
#include <string_view>

#include "ptdiag/param_family.hpp"

namespace ptdiag {

class EntryExpr {
 public:
  struct Node;

  explicit EntryExpr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

  EpsPoly evaluate() const;
  bool mentions_eps() const;

 private:
  std::shared_ptr<const Node> root_;
};

// Throws ParseError carrying the byte offset and the expected token.
EntryExpr parse_entry(std::string_view src);

// parse_entry(src).evaluate()
EpsPoly parse_eps_poly(std::string_view src);

}  // namespace ptdiag
