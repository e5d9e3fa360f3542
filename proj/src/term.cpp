#include "qlmc/term.hpp"

#include <stdexcept>

namespace qlmc {

Term Term::atom(std::string name) {
  return Term(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), nullptr, nullptr}));
}

Term Term::zero() {
  return Term(std::make_shared<const Node>(Node{Kind::Zero, {}, nullptr, nullptr}));
}

Term Term::one() {
  return Term(std::make_shared<const Node>(Node{Kind::One, {}, nullptr, nullptr}));
}

Term Term::neg(Term inner) {
  return Term(std::make_shared<const Node>(Node{Kind::Neg, {}, std::move(inner.node_), nullptr}));
}

Term Term::star(Term left, Term right) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Star, {}, std::move(left.node_), std::move(right.node_)}));
}

const std::string& Term::atom_name() const {
  if (kind() != Kind::Atom) throw std::logic_error("atom_name on non-atom term");
  return node_->name;
}

Term Term::child() const {
  if (kind() != Kind::Neg) throw std::logic_error("child on non-negation term");
  return Term(node_->a);
}

Term Term::left() const {
  if (kind() != Kind::Star) throw std::logic_error("left on non-star term");
  return Term(node_->a);
}

Term Term::right() const {
  if (kind() != Kind::Star) throw std::logic_error("right on non-star term");
  return Term(node_->b);
}

namespace {

bool struct_eq(const Term& a, const Term& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Atom:
      return a.atom_name() == b.atom_name();
    case Term::Kind::Zero:
    case Term::Kind::One:
      return true;
    case Term::Kind::Neg:
      return struct_eq(a.child(), b.child());
    case Term::Kind::Star:
      return struct_eq(a.left(), b.left()) && struct_eq(a.right(), b.right());
  }
  return false;
}

}  // namespace

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  return struct_eq(*this, other);
}

namespace {

void collect_atoms(const Term& t, std::vector<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Atom: {
      const std::string& name = t.atom_name();
      for (const auto& seen : out)
        if (seen == name) return;
      out.push_back(name);
      return;
    }
    case Term::Kind::Zero:
    case Term::Kind::One:
      return;
    case Term::Kind::Neg:
      collect_atoms(t.child(), out);
      return;
    case Term::Kind::Star:
      collect_atoms(t.left(), out);
      collect_atoms(t.right(), out);
      return;
  }
}

// Precedence levels: star = 1, neg = 2, leaves = 3. A subterm is wrapped in
// parentheses when its level is below what the context requires.
int level(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Star:
      return 1;
    case Term::Kind::Neg:
      return 2;
    default:
      return 3;
  }
}

void render(const Term& t, int min_level, std::string& out) {
  const bool parens = level(t) < min_level;
  if (parens) out += '(';
  switch (t.kind()) {
    case Term::Kind::Atom:
      out += t.atom_name();
      break;
    case Term::Kind::Zero:
      out += '0';
      break;
    case Term::Kind::One:
      out += '1';
      break;
    case Term::Kind::Neg:
      out += '!';
      render(t.child(), 2, out);
      break;
    case Term::Kind::Star:
      render(t.left(), 1, out);
      out += " * ";
      render(t.right(), 2, out);  // right-nested star must be parenthesized
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::vector<std::string> atoms_of(const Term& t) {
  std::vector<std::string> out;
  collect_atoms(t, out);
  return out;
}

std::vector<std::string> atoms_of(const Prop& p) {
  std::vector<std::string> out;
  for (const auto& eq : p.antecedents) {
    collect_atoms(eq.lhs, out);
    collect_atoms(eq.rhs, out);
  }
  collect_atoms(p.conclusion.lhs, out);
  collect_atoms(p.conclusion.rhs, out);
  return out;
}

std::string print_term(const Term& t) {
  std::string out;
  render(t, 1, out);
  return out;
}

std::string print_prop(const Prop& p) {
  std::string out;
  if (!p.antecedents.empty()) {
    out += "if ";
    bool first = true;
    for (const auto& eq : p.antecedents) {
      if (!first) out += " and ";
      first = false;
      out += print_term(eq.lhs);
      out += " = ";
      out += print_term(eq.rhs);
    }
    out += " then ";
  }
  out += print_term(p.conclusion.lhs);
  out += " = ";
  out += print_term(p.conclusion.rhs);
  return out;
}

}  // namespace qlmc
