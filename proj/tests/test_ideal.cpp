#include <algorithm>

#include "doctest.h"
#include "qlmc/ideal.hpp"
#include "qlmc/modelspec.hpp"
#include "qlmc/parser.hpp"
#include "qlmc/suite.hpp"

using namespace qlmc;

namespace {

FiniteModel model_of(const char* spec) { return *parse_model_spec(spec).finite; }

std::size_t named(const FiniteModel& m, const char* name) {
  const auto idx = m.index_of(name);
  REQUIRE(idx.has_value());
  return *idx;
}

ElemSet carrier(const FiniteModel& m) {
  ElemSet all(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) all[i] = i;
  return all;
}

bool axiom_valid(const FiniteModel& m) {
  for (const auto& entry : catalog()) {
    if (entry.tier != Tier::Axiom) continue;
    if (valid_in_model(*entry.prop, m).status != Status::Valid) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("is_ideal on pinned examples") {
  const FiniteModel b2 = model_of("boolean:2");
  CHECK(!is_ideal(b2, {b2.zero()}));
  CHECK(!is_ideal(b2, carrier(b2)));
  CHECK(!is_ideal(b2, {named(b2, "00"), named(b2, "10")}));  // principal ideal below an atom

  // {0, 1} is not an ideal in a nondegenerate model: 1 * a = a escapes
  const auto v = is_ideal(b2, {b2.zero(), b2.one()});
  REQUIRE(v.has_value());
  CHECK(v->condition == 2);

  const FiniteModel mo2 = model_of("mo:2");
  CHECK(!is_ideal(mo2, {mo2.zero()}));
  CHECK(!is_ideal(mo2, carrier(mo2)));
  // {0, a} fails absorption in mo:2 (a * b = b escapes)
  CHECK(is_ideal(mo2, {mo2.zero(), named(mo2, "a")}).has_value());
}

TEST_CASE("leq_I and sim_I") {
  const FiniteModel b2 = model_of("boolean:2");
  const ElemSet zero_only = {b2.zero()};

  // with I = {0} the relation collapses to the plain order
  for (std::size_t a = 0; a < b2.size(); ++a)
    for (std::size_t b = 0; b < b2.size(); ++b)
      CHECK(leq_I(b2, zero_only, a, b) == (b2.star(a, b) == a));

  // with I = the whole carrier everything relates
  for (std::size_t a = 0; a < b2.size(); ++a)
    for (std::size_t b = 0; b < b2.size(); ++b) CHECK(sim_I(b2, carrier(b2), a, b));

  // in boolean:2 with I = {0, a}: 1 ~I a'
  const ElemSet ideal = {named(b2, "00"), named(b2, "10")};
  CHECK(sim_I(b2, ideal, b2.one(), named(b2, "01")));
}

TEST_CASE("is_congruence on pinned relations") {
  const FiniteModel b2 = model_of("boolean:2");
  const std::size_t n = b2.size();

  BinaryRelation identity{n, std::vector<std::uint8_t>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i) identity.set(i, i, true);
  CHECK(!is_congruence(b2, identity));

  BinaryRelation total{n, std::vector<std::uint8_t>(n * n, 1)};
  CHECK(!is_congruence(b2, total));

  // break star-compatibility: relate 0 with an atom only
  BinaryRelation broken = identity;
  broken.set(b2.zero(), named(b2, "10"), true);
  broken.set(named(b2, "10"), b2.zero(), true);
  CHECK(is_congruence(b2, broken).has_value());
}

TEST_CASE("congruence_from_ideal materializes ~I") {
  const FiniteModel b2 = model_of("boolean:2");

  const BinaryRelation id_rel = congruence_from_ideal(b2, {b2.zero()});
  for (std::size_t a = 0; a < b2.size(); ++a)
    for (std::size_t b = 0; b < b2.size(); ++b) CHECK(id_rel.at(a, b) == (a == b));

  const BinaryRelation total = congruence_from_ideal(b2, carrier(b2));
  for (std::size_t a = 0; a < b2.size(); ++a)
    for (std::size_t b = 0; b < b2.size(); ++b) CHECK(total.at(a, b));

  // classes of {0,a}: {0,a} and {a',1}
  const ElemSet ideal = {named(b2, "00"), named(b2, "10")};
  const BinaryRelation r = congruence_from_ideal(b2, ideal);
  CHECK(r.at(named(b2, "00"), named(b2, "10")));
  CHECK(r.at(named(b2, "01"), named(b2, "11")));
  CHECK(!r.at(named(b2, "00"), named(b2, "11")));

  CHECK_THROWS_AS(congruence_from_ideal(b2, {b2.zero(), b2.one()}), std::invalid_argument);
}

TEST_CASE("enumerate_ideals matches the classical counts") {
  // a finite boolean algebra has exactly one (principal) ideal per element
  CHECK(enumerate_ideals(model_of("boolean:2")).size() == 4);
  CHECK(enumerate_ideals(model_of("boolean:3")).size() == 8);
  CHECK(enumerate_ideals(model_of("boolean:4")).size() == 16);
  // mo:2 is simple: only the trivial ideals
  const auto mo2_ideals = enumerate_ideals(model_of("mo:2"));
  CHECK(mo2_ideals.size() == 2);
  CHECK_THROWS_AS(enumerate_ideals(model_of("boolean:5")), std::invalid_argument);
}

TEST_CASE("quotients: classes, homomorphism, kernel") {
  const FiniteModel b2 = model_of("boolean:2");

  // quotient by {0} is the model itself up to renaming
  const Quotient q0 = quotient(b2, {b2.zero()});
  CHECK(q0.model.size() == b2.size());
  for (const auto& cls : q0.classes) CHECK(cls.size() == 1);

  // quotient by the principal ideal has exactly two classes
  const ElemSet ideal = {named(b2, "00"), named(b2, "10")};
  const Quotient q = quotient(b2, ideal);
  CHECK(q.model.size() == 2);
  CHECK(!is_homomorphism(q.projection));
  CHECK(kernel(q.projection) == ideal);
  CHECK(axiom_valid(q.model));
  CHECK(classify(q.model).boolean_algebra);

  // quotient by the carrier is the point model
  const Quotient q1 = quotient(b2, carrier(b2));
  CHECK(q1.model.size() == 1);
  CHECK(axiom_valid(q1.model));

  // boolean:3 / (ideal below an atom) is the four-element boolean algebra
  const FiniteModel b3 = model_of("boolean:3");
  const Quotient q3 = quotient(b3, {named(b3, "000"), named(b3, "100")});
  CHECK(q3.model.size() == 4);
  CHECK(axiom_valid(q3.model));
  CHECK(classify(q3.model).all_equal());
}

TEST_CASE("hand-built homomorphisms") {
  const FiniteModel b2 = model_of("boolean:2");

  Homomorphism id{b2, b2, {}};
  for (std::size_t i = 0; i < b2.size(); ++i) id.map.push_back(i);
  CHECK(!is_homomorphism(id));
  CHECK(kernel(id) == ElemSet{b2.zero()});

  const FiniteModel point = model_of("boolean:0");
  Homomorphism constant{b2, point, std::vector<std::size_t>(b2.size(), 0)};
  CHECK(!is_homomorphism(constant));
  CHECK(kernel(constant) == carrier(b2));

  // swapping the two atoms is an automorphism of boolean:2
  Homomorphism swap_atoms{b2, b2, {}};
  for (std::size_t i = 0; i < b2.size(); ++i) swap_atoms.map.push_back(i);
  std::swap(swap_atoms.map[named(b2, "10")], swap_atoms.map[named(b2, "01")]);
  CHECK(!is_homomorphism(swap_atoms));

  // collapsing everything but 0 onto 1 is not: it breaks negation
  Homomorphism collapse{b2, b2, std::vector<std::size_t>(b2.size(), b2.one())};
  collapse.map[b2.zero()] = b2.zero();
  const auto violation = is_homomorphism(collapse);
  REQUIRE(violation.has_value());
  CHECK(violation->law == "neg");

  // kernels of constructed homomorphisms are ideals
  CHECK(!is_ideal(b2, kernel(id)));
  CHECK(!is_ideal(b2, kernel(constant)));
}

TEST_CASE("ideal lemmas hold exhaustively on boolean:3 and mo:2") {
  for (const char* spec : {"boolean:3", "mo:2"}) {
    const FiniteModel m = model_of(spec);
    const std::size_t n = m.size();
    const auto le = [&m](std::size_t a, std::size_t b) { return m.star(a, b) == a; };

    for (const ElemSet& I : enumerate_ideals(m)) {
      INFO(spec);
      std::vector<std::uint8_t> mask(n, 0);
      for (const std::size_t e : I) mask[e] = 1;

      // downward closure and star symmetry
      for (std::size_t x = 0; x < n; ++x) {
        if (mask[x])
          for (std::size_t y = 0; y < n; ++y)
            if (le(y, x)) CHECK(mask[y]);
        for (std::size_t y = 0; y < n; ++y)
          if (mask[m.star(x, y)]) CHECK(mask[m.star(y, x)]);
      }

      // the induced relations: plain order embeds, quasi-order, equivalence
      for (std::size_t x = 0; x < n; ++x) {
        CHECK(leq_I(m, I, x, x));
        for (std::size_t y = 0; y < n; ++y) {
          if (le(x, y)) CHECK(leq_I(m, I, x, y));
          if (leq_I(m, I, x, y)) {
            CHECK(leq_I(m, I, m.neg(y), m.neg(x)));  // antitone
            for (std::size_t z = 0; z < n; ++z) {
              if (leq_I(m, I, y, z)) CHECK(leq_I(m, I, x, z));           // transitive
              CHECK(leq_I(m, I, m.star(x, z), m.star(y, z)));            // left star-monotone
            }
          }
          CHECK(leq_I(m, I, x, y) == sim_I(m, I, m.star(x, y), x));      // x <=I y iff x*y ~I x
          if (sim_I(m, I, m.star(x, y), m.star(y, x)))                   // commutation transfers
            CHECK(sim_I(m, I, m.star(m.neg(x), y), m.star(y, m.neg(x))));
        }
      }

      // the full pipeline on this ideal
      const Quotient q = quotient(m, I);
      CHECK(!is_homomorphism(q.projection));
      CHECK(kernel(q.projection) == I);
      CHECK(!is_ideal(m, kernel(q.projection)));
      CHECK(axiom_valid(q.model));
    }
  }
}
