#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlmc/finite_model.hpp"

namespace qlmc {

using ElemSet = std::vector<std::size_t>;  // sorted, unique

struct IdealViolation {
  int condition = 0;  // 1..6
  std::string witness;
};

// The six ideal conditions, checked exhaustively:
//   1. 0 is a member,
//   2. members absorb star on both sides,
//   3. x*y and z*!y members imply x*z a member,
//   4. x*y <=I x implies x*y ~I y*x,
//   5. x*y ~I y*x implies (z*x)*y ~I z*(x*y) for every z,
//   6. (z*x)*y <=I x and (z*y)*x <=I y imply (z*x)*y ~I (z*y)*x,
// where a <=I b iff a*!b is a member and ~I is <=I both ways.
std::optional<IdealViolation> is_ideal(const FiniteModel& m, const ElemSet& members);

bool leq_I(const FiniteModel& m, const ElemSet& members, std::size_t a, std::size_t b);
bool sim_I(const FiniteModel& m, const ElemSet& members, std::size_t a, std::size_t b);

struct BinaryRelation {
  std::size_t n = 0;
  std::vector<std::uint8_t> rel;  // n*n

  bool at(std::size_t a, std::size_t b) const { return rel[a * n + b] != 0; }
  void set(std::size_t a, std::size_t b, bool v) { rel[a * n + b] = v ? 1 : 0; }
};

struct CongruenceViolation {
  std::string law;  // "reflexive", "symmetric", "transitive", "neg", "star"
  std::string witness;
};

std::optional<CongruenceViolation> is_congruence(const FiniteModel& m, const BinaryRelation& r);

// Materializes ~I for a verified ideal. Throws std::invalid_argument when
// `members` is not an ideal; the congruence laws and class-of-zero == I are
// re-asserted and a failure there is a logic error (they are theorems).
BinaryRelation congruence_from_ideal(const FiniteModel& m, const ElemSet& members);

struct Homomorphism {
  FiniteModel source;
  FiniteModel target;
  std::vector<std::size_t> map;  // source index -> target index
};

struct HomViolation {
  std::string law;  // "zero", "one", "neg", "star"
  std::string witness;
};

std::optional<HomViolation> is_homomorphism(const Homomorphism& h);

// Preimage of the target's zero.
ElemSet kernel(const Homomorphism& h);

struct Quotient {
  FiniteModel model;
  Homomorphism projection;       // source -> quotient, onto by construction
  std::vector<ElemSet> classes;  // indexed by quotient element
};

// Quotient by the congruence of a verified ideal. Operations are computed
// from one representative and re-checked against every member of each class;
// a well-definedness failure is a logic error naming the class pair.
Quotient quotient(const FiniteModel& m, const ElemSet& members);

// All ideals of a small model (carrier of at most 16), by subset
// enumeration.
std::vector<ElemSet> enumerate_ideals(const FiniteModel& m);

}  // namespace qlmc
