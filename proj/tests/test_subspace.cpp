#include <stdexcept>

#include "doctest.h"
#include "qlmc/hilbert.hpp"
#include "qlmc/rational.hpp"
#include "qlmc/rng.hpp"
#include "qlmc/subspace.hpp"

using namespace qlmc;

namespace {

RationalVector vec(std::initializer_list<long long> xs) {
  RationalVector v;
  for (const long long x : xs) v.push_back(Rational(x));
  return v;
}

RationalSubspace line2(long long a, long long b) {
  return RationalSubspace::span(2, {vec({a, b})});
}

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(-1, 2).str() == "-1/2");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  // arbitrary precision: no silent wraparound at machine-word scale
  const Rational big(9'000'000'000'000'000'000LL);
  CHECK((big * big).str() == "81000000000000000000000000000000000000");
  CHECK(big * big / big == big);
}

TEST_CASE("canonical row echelon form") {
  CHECK(RationalSubspace::span(2, {vec({2, 0})}) == line2(1, 0));
  CHECK(RationalSubspace::span(2, {vec({1, 1}), vec({2, 2})}).dim() == 1);
  CHECK(RationalSubspace::span(2, {vec({1, 1}), vec({1, -1})}) == RationalSubspace::full(2));
  CHECK(RationalSubspace::zero(3).dim() == 0);
  CHECK(RationalSubspace::full(3).dim() == 3);
  CHECK(RationalSubspace::span(2, {vec({0, 0})}) == RationalSubspace::zero(2));
}

TEST_CASE("complement basics") {
  CHECK(complement(RationalSubspace::full(2)) == RationalSubspace::zero(2));
  CHECK(complement(RationalSubspace::zero(2)) == RationalSubspace::full(2));
  CHECK(complement(line2(1, 0)) == line2(0, 1));
  CHECK(complement(line2(1, 1)) == line2(1, -1));
}

TEST_CASE("sum and intersection basics") {
  const RationalSubspace a = line2(1, 0);
  CHECK(sum(a, RationalSubspace::zero(2)) == a);
  CHECK(intersect(a, RationalSubspace::full(2)) == a);
  CHECK(sum(line2(1, 0), line2(0, 1)) == RationalSubspace::full(2));
  CHECK(intersect(line2(1, 0), line2(1, 1)) == RationalSubspace::zero(2));

  const RationalSubspace plane =
      RationalSubspace::span(3, {vec({1, 0, 0}), vec({0, 1, 0})});
  const RationalSubspace diag = RationalSubspace::span(3, {vec({1, 1, 0})});
  CHECK(intersect(plane, diag) == diag);
  CHECK(plane.contains(diag));

  CHECK_THROWS_AS(sum(line2(1, 0), RationalSubspace::zero(3)), std::invalid_argument);
}

TEST_CASE("projection formula and oracle on pinned cases") {
  const RationalSubspace a = line2(1, 0);
  const RationalSubspace b = line2(1, 1);
  CHECK(project(a, b) == b);
  CHECK(projection_oracle(a, b) == b);
  CHECK(project(a, RationalSubspace::full(2)) == a);
  CHECK(project(a, RationalSubspace::zero(2)) == RationalSubspace::zero(2));
  CHECK(projection_oracle(a, RationalSubspace::full(2)) == a);
  // projecting the xz-plane onto the xy-plane collapses z
  const RationalSubspace xz = RationalSubspace::span(3, {vec({1, 0, 0}), vec({0, 0, 1})});
  const RationalSubspace xy = RationalSubspace::span(3, {vec({1, 0, 0}), vec({0, 1, 0})});
  CHECK(project(xz, xy) == RationalSubspace::span(3, {vec({1, 0, 0})}));
}

TEST_CASE("random subspace properties in dims 2..4") {
  for (std::size_t dim = 2; dim <= 4; ++dim) {
    const HilbertModel m = make_hilbert(dim);
    Rng rng(1000 + dim);
    for (int i = 0; i < 120; ++i) {
      const RationalSubspace a = m.sample(rng);
      const RationalSubspace b = m.sample(rng);

      // involution and the dimension laws
      CHECK(complement(complement(a)) == a);
      CHECK(a.dim() + complement(a).dim() == dim);
      CHECK(sum(a, b).dim() + intersect(a, b).dim() == a.dim() + b.dim());

      // the two intersection routes agree
      CHECK(intersect(a, b) == intersect_via_complements(a, b));

      // projection: oracle equality and containment
      const RationalSubspace p = project(a, b);
      CHECK(p == projection_oracle(a, b));
      CHECK(b.contains(p));
      CHECK((p == a) == b.contains(a));
    }
  }
}

TEST_CASE("subspace literals parse and render") {
  CHECK(parse_subspace("span[(1,0),(0,1)]") == RationalSubspace::full(2));
  CHECK(parse_subspace("span[(3,4)]") == line2(3, 4));
  CHECK(parse_subspace("span[(1, -3/4)]") == line2(4, -3));
  CHECK(parse_subspace("span[]", 2) == RationalSubspace::zero(2));
  CHECK_THROWS_AS(parse_subspace("span[]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_subspace("span[(1,0),(1,2,3)]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_subspace("span[(1,0)] junk"), std::invalid_argument);

  Rng rng(77);
  const HilbertModel m = make_hilbert(3);
  for (int i = 0; i < 50; ++i) {
    const RationalSubspace s = m.sample(rng);
    CHECK(parse_subspace(s.render(), 3) == s);
  }
}
