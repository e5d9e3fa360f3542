#include "doctest.h"
#include "qlmc/lattice.hpp"
#include "qlmc/model.hpp"
#include "qlmc/parser.hpp"

using namespace qlmc;

namespace {

FiniteModel model_of(const LatticeSpec& spec) { return as_model(build(spec)); }

std::size_t named(const FiniteModel& m, const char* name) {
  const auto idx = m.index_of(name);
  REQUIRE(idx.has_value());
  return *idx;
}

}  // namespace

TEST_CASE("eval_term structural fold") {
  const FiniteModel b1 = model_of(BooleanSpec{1});
  CHECK(eval_term(parse_term("1"), b1, {}) == b1.one());
  CHECK(eval_term(parse_term("0"), b1, {}) == b1.zero());
  CHECK(eval_term(parse_term("!1"), b1, {}) == b1.zero());

  const Assignment<FiniteModel> a = {{"x", b1.one()}};
  CHECK(eval_term(parse_term("x * !x"), b1, a) == b1.zero());

  try {
    eval_term(parse_term("x * missing"), b1, a);
    FAIL("expected UnboundAtomError");
  } catch (const UnboundAtomError& e) {
    CHECK(e.atom() == "missing");
  }
}

TEST_CASE("zero and !1 evaluate equal in every builtin model") {
  for (const LatticeSpec& spec :
       {LatticeSpec{BooleanSpec{1}}, LatticeSpec{BooleanSpec{2}}, LatticeSpec{BooleanSpec{3}},
        LatticeSpec{MOSpec{2}}, LatticeSpec{MOSpec{3}}, LatticeSpec{O6Spec{}}}) {
    const FiniteModel m = model_of(spec);
    CHECK(m.equal(eval_term(parse_term("0"), m, {}), eval_term(parse_term("!1"), m, {})));
  }
}

TEST_CASE("satisfies: antecedent failure or conclusion") {
  const FiniteModel b1 = model_of(BooleanSpec{1});
  const Assignment<FiniteModel> any = {{"x", b1.zero()}, {"y", b1.one()}};
  CHECK(satisfies(parse_prop("x = x"), b1, any));
  // vacuous: the antecedent 1 = 0 fails in a nondegenerate model
  CHECK(satisfies(parse_prop("if 1 = 0 then x = y"), b1, any));
  CHECK(!satisfies(parse_prop("x = y"), b1, any));

  const FiniteModel mo2 = model_of(MOSpec{2});
  const Assignment<FiniteModel> ab = {{"x", named(mo2, "a")}, {"y", named(mo2, "b")}};
  CHECK(!satisfies(parse_prop("x * y = y * x"), mo2, ab));
}

TEST_CASE("valid_in_model: status and first counterexample") {
  const FiniteModel b3 = model_of(BooleanSpec{3});
  CHECK(valid_in_model(parse_prop("1 * x = x"), b3).status == Status::Valid);
  // commutativity holds in every boolean model
  for (unsigned k : {1u, 2u, 3u})
    CHECK(valid_in_model(parse_prop("x * y = y * x"), model_of(BooleanSpec{k})).status ==
          Status::Valid);

  const FiniteModel mo2 = model_of(MOSpec{2});
  const auto r = valid_in_model(parse_prop("x * y = y * x"), mo2);
  REQUIRE(r.status == Status::Falsified);
  REQUIRE(r.cex.has_value());
  // first in odometer order: x=a, y=b
  CHECK(r.cex->assignment[0].first == "x");
  CHECK(r.cex->assignment[0].second == named(mo2, "a"));
  CHECK(r.cex->assignment[1].second == named(mo2, "b"));
  // the returned counterexample replays
  CHECK(!satisfies(parse_prop("x * y = y * x"), mo2, r.cex->assignment));
}

TEST_CASE("valid_in_model: budget is an explicit outcome") {
  const FiniteModel mo2 = model_of(MOSpec{2});
  const auto r = valid_in_model(parse_prop("x * y = y * x"), mo2, ValidOptions{10, 1});
  CHECK(r.status == Status::Undecided);
  CHECK(r.detail == "budget");
}

TEST_CASE("falsify by enumeration agrees with valid_in_model") {
  const FiniteModel mo2 = model_of(MOSpec{2});
  for (const char* text : {"x * y = y * x", "1 * x = x", "x * y * z = z * y * x",
                           "if x <= y then x * y = y * x"}) {
    const Prop p = parse_prop(text);
    const auto exhaustive = valid_in_model(p, mo2);
    const auto scan = falsify(p, mo2, 1'000'000);
    if (exhaustive.status == Status::Valid) {
      CHECK(scan.status == Status::Undecided);  // not-found is never a validity claim
    } else {
      REQUIRE(scan.status == Status::Falsified);
      CHECK(scan.cex->assignment == exhaustive.cex->assignment);
    }
  }
}

TEST_CASE("one-element model satisfies everything") {
  const FiniteModel point = model_of(BooleanSpec{0});
  CHECK(point.size() == 1);
  CHECK(valid_in_model(parse_prop("x = y"), point).status == Status::Valid);
  CHECK(falsify(parse_prop("x = y"), point, 10).status == Status::Undecided);
}

TEST_CASE("parallel validity equals sequential") {
  const FiniteModel mo2 = model_of(MOSpec{2});
  // five atoms to push past the sequential cutoff (6^5 assignments)
  const Prop assoc = parse_prop("v * (w * (x * (y * z))) = (((v * w) * x) * y) * z");
  const Prop validp = parse_prop("1 * (v * (w * (x * (y * z)))) = v * (w * (x * (y * z)))");
  for (const Prop& p : {assoc, validp}) {
    const auto seq = valid_in_model(p, mo2, ValidOptions{100'000'000, 1});
    const auto par = valid_in_model(p, mo2, ValidOptions{100'000'000, 4});
    CHECK(seq.status == par.status);
    if (seq.cex) {
      REQUIRE(par.cex.has_value());
      CHECK(seq.cex->assignment == par.cex->assignment);
    }
  }
}
