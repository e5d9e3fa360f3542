#pragma once

#include <memory>
#include <string>
#include <vector>

namespace qlmc {

// Measurement terms: atoms, the constants 0 and 1, negation `!` and the
// binary "and then" connective `*`. Immutable trees with value semantics;
// copies share structure, equality is structural.
class Term {
 public:
  enum class Kind { Atom, Zero, One, Neg, Star };

  static Term atom(std::string name);
  static Term zero();
  static Term one();
  static Term neg(Term inner);
  static Term star(Term left, Term right);

  Kind kind() const { return node_->kind; }
  const std::string& atom_name() const;  // Kind::Atom only
  Term child() const;                    // Kind::Neg only
  Term left() const;                     // Kind::Star only
  Term right() const;                    // Kind::Star only

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

 private:
  struct Node {
    Kind kind;
    std::string name;                  // Atom
    std::shared_ptr<const Node> a, b;  // Neg uses a; Star uses a and b
  };

  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// A simple proposition: two terms claimed equal.
struct Equation {
  Term lhs;
  Term rhs;

  bool operator==(const Equation& other) const {
    return lhs == other.lhs && rhs == other.rhs;
  }
  bool operator!=(const Equation& other) const { return !(*this == other); }
};

// Conditional proposition. Nested `if ... then if ... then P` forms are kept
// flattened: all antecedents in one list, one conclusion. An empty antecedent
// list is a simple proposition.
struct Prop {
  std::vector<Equation> antecedents;
  Equation conclusion;

  bool operator==(const Prop& other) const {
    return antecedents == other.antecedents && conclusion == other.conclusion;
  }
  bool operator!=(const Prop& other) const { return !(*this == other); }
};

// Distinct atom names in first-occurrence order (lhs before rhs,
// antecedents before conclusion, depth-first left to right).
std::vector<std::string> atoms_of(const Term& t);
std::vector<std::string> atoms_of(const Prop& p);

// Minimal-parenthesis rendering. `*` is left-associative and `!` binds
// tighter, so only right-nested stars and negated compounds get parentheses.
// parse_term(print_term(t)) == t for every term.
std::string print_term(const Term& t);

// Equations print in desugared form (`a * b = a`, never `a <= b`);
// parse_prop(print_prop(p)) == p.
std::string print_prop(const Prop& p);

}  // namespace qlmc
