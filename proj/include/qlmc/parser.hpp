#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qlmc/term.hpp"

namespace qlmc {

// Syntax error with the byte offset of the offending token and the set of
// token descriptions that would have been accepted there.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, std::string found);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
  std::string found_;
};

// Grammar:
//   term  := "(" term ")" | "0" | "1" | ident | "!" term | term "*" term
//   eq    := term ("=" | "<=" | "_|_") term
//   prop  := eq | "if" eq ("and" eq)* "then" prop
//   ident := [a-z][a-z0-9_]*
// `*` is left-associative, `!` binds tighter than `*`, whitespace is
// insignificant and `#` starts a line comment. `if`, `and`, `then` are
// reserved words.
Term parse_term(std::string_view text);

// `a <= b` desugars to `a * b = a`; `a _|_ b` desugars to `a * b = 0`;
// nested conditionals flatten into a single antecedent list.
Prop parse_prop(std::string_view text);

struct NamedProp {
  std::string name;  // leading `name:` label, or the canonical rendering
  Prop prop;
};

// One proposition per nonblank noncomment line, optional `name:` label.
std::vector<NamedProp> parse_qlp(std::string_view text);
std::vector<NamedProp> parse_qlp_file(const std::string& path);

}  // namespace qlmc
