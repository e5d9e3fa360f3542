#include "qlmc/suite.hpp"

#include <chrono>

#include "qlmc/model.hpp"

namespace qlmc {

namespace {

bool tier_selected(const TierSet& tiers, Tier t) {
  switch (t) {
    case Tier::Axiom:
      return tiers.axioms;
    case Tier::Derived:
      return tiers.derived;
    case Tier::LatticeLemma:
      return tiers.lattice;
  }
  return false;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

SuiteReport run_suite(const FiniteModel& m, const FiniteOrtholattice* lattice,
                      const SuiteOptions& opt) {
  Stopwatch watch;
  SuiteReport rep;
  rep.model_id = m.id;
  for (const auto& entry : catalog()) {
    if (!tier_selected(opt.tiers, entry.tier)) continue;
    if (entry.tier == Tier::LatticeLemma) {
      ReportEntry e;
      e.name = entry.name;
      if (!lattice) {
        e.status = Status::Skipped;
        e.detail = "lattice models only";
      } else if (auto v = entry.lattice_check(*lattice)) {
        e.status = Status::Falsified;
        e.detail = v->message;
      } else {
        e.status = Status::Valid;
      }
      rep.entries.push_back(std::move(e));
      continue;
    }
    const CheckResult<FiniteModel> r =
        valid_in_model(*entry.prop, m, ValidOptions{opt.finite_budget, opt.jobs});
    rep.entries.push_back(make_entry(entry.name, m, r));
  }
  rep.elapsed_seconds = watch.seconds();
  return rep;
}

SuiteReport run_suite(const HilbertModel& m, const SuiteOptions& opt) {
  Stopwatch watch;
  SuiteReport rep;
  rep.model_id = m.id;
  for (const auto& entry : catalog()) {
    if (!tier_selected(opt.tiers, entry.tier)) continue;
    if (entry.tier == Tier::LatticeLemma) {
      rep.entries.push_back(ReportEntry{entry.name, Status::Skipped, "lattice models only", {}});
      continue;
    }
    const CheckResult<HilbertModel> r = falsify(*entry.prop, m, opt.sample_budget, opt.seed);
    rep.entries.push_back(make_entry(entry.name, m, r));
  }
  rep.elapsed_seconds = watch.seconds();
  return rep;
}

namespace {

std::string pair_witness(const FiniteModel& m, std::size_t a, std::size_t b) {
  return "(" + m.names[a] + ", " + m.names[b] + ")";
}

std::string triple_witness(const FiniteModel& m, std::size_t a, std::size_t b, std::size_t c) {
  return "(" + m.names[a] + ", " + m.names[b] + ", " + m.names[c] + ")";
}

}  // namespace

std::vector<StructuralCheck> run_structural(const FiniteModel& m) {
  const std::size_t n = m.size();
  std::vector<std::uint8_t> le(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) le[a * n + b] = (m.star(a, b) == a) ? 1 : 0;
  const auto leq = [&](std::size_t a, std::size_t b) { return le[a * n + b] != 0; };

  std::vector<StructuralCheck> out;
  const auto fail = [&out](const std::string& name, const std::string& witness) {
    out.push_back(StructuralCheck{name, false, witness});
  };
  const auto pass = [&out](const std::string& name) {
    out.push_back(StructuralCheck{name, true, ""});
  };

  {  // reflexive
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      if (!leq(a, a)) {
        fail("order-reflexive", m.names[a]);
        ok = false;
      }
    if (ok) pass("order-reflexive");
  }
  {  // antisymmetric
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        if (a != b && leq(a, b) && leq(b, a)) {
          fail("order-antisymmetric", pair_witness(m, a, b));
          ok = false;
        }
    if (ok) pass("order-antisymmetric");
  }
  {  // transitive
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (!leq(a, b)) continue;
        for (std::size_t c = 0; c < n && ok; ++c)
          if (leq(b, c) && !leq(a, c)) {
            fail("order-transitive", triple_witness(m, a, b, c));
            ok = false;
          }
      }
    if (ok) pass("order-transitive");
  }
  {  // star is the glb of every commuting pair
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (m.star(a, b) != m.star(b, a)) continue;
        const std::size_t g = m.star(a, b);
        if (!leq(g, a) || !leq(g, b)) {
          fail("commuting-glb", pair_witness(m, a, b));
          ok = false;
          break;
        }
        for (std::size_t h = 0; h < n; ++h)
          if (leq(h, a) && leq(h, b) && !leq(h, g)) {
            fail("commuting-glb", triple_witness(m, a, b, h));
            ok = false;
            break;
          }
      }
    if (ok) pass("commuting-glb");
  }
  {  // !(!a * !b) is the lub of every commuting pair
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (m.star(a, b) != m.star(b, a)) continue;
        const std::size_t l = m.neg(m.star(m.neg(a), m.neg(b)));
        if (!leq(a, l) || !leq(b, l)) {
          fail("commuting-lub", pair_witness(m, a, b));
          ok = false;
          break;
        }
        for (std::size_t u = 0; u < n; ++u)
          if (leq(a, u) && leq(b, u) && !leq(l, u)) {
            fail("commuting-lub", triple_witness(m, a, b, u));
            ok = false;
            break;
          }
      }
    if (ok) pass("commuting-lub");
  }
  {  // a <= b implies b is the lub of a and !a * b
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (!leq(a, b)) continue;
        const std::size_t c = m.star(m.neg(a), b);
        if (!leq(c, b)) {
          fail("orthomodular-lub", pair_witness(m, a, b));
          ok = false;
          break;
        }
        for (std::size_t u = 0; u < n; ++u)
          if (leq(a, u) && leq(c, u) && !leq(b, u)) {
            fail("orthomodular-lub", triple_witness(m, a, b, u));
            ok = false;
            break;
          }
      }
    if (ok) pass("orthomodular-lub");
  }
  return out;
}

ClassificationFlags classify(const FiniteModel& m) {
  const std::size_t n = m.size();
  ClassificationFlags f;

  for (std::size_t a = 0; a < n && f.commutative; ++a)
    for (std::size_t b = 0; b < n && f.commutative; ++b)
      if (m.star(a, b) != m.star(b, a)) {
        f.commutative = false;
        f.commutative_witness = pair_witness(m, a, b);
      }

  for (std::size_t a = 0; a < n && f.associative; ++a)
    for (std::size_t b = 0; b < n && f.associative; ++b)
      for (std::size_t c = 0; c < n && f.associative; ++c)
        if (m.star(m.star(a, b), c) != m.star(a, m.star(b, c))) {
          f.associative = false;
          f.associative_witness = triple_witness(m, a, b, c);
        }

  // monotone: a*b <= a, with <= materialized from star
  for (std::size_t a = 0; a < n && f.monotone; ++a)
    for (std::size_t b = 0; b < n && f.monotone; ++b) {
      const std::size_t ab = m.star(a, b);
      if (m.star(ab, a) != ab) {
        f.monotone = false;
        f.monotone_witness = pair_witness(m, a, b);
      }
    }

  // Boolean: commutative, associative, and the Robbins equation
  // !(!a * b) * !(!a * !b) = a holds unconditionally.
  f.boolean_algebra = f.commutative && f.associative;
  if (!f.commutative) {
    f.boolean_witness = "not commutative at " + f.commutative_witness;
  } else if (!f.associative) {
    f.boolean_witness = "not associative at " + f.associative_witness;
  }
  for (std::size_t a = 0; a < n && f.boolean_algebra; ++a)
    for (std::size_t b = 0; b < n && f.boolean_algebra; ++b) {
      const std::size_t lhs =
          m.star(m.neg(m.star(m.neg(a), b)), m.neg(m.star(m.neg(a), m.neg(b))));
      if (lhs != a) {
        f.boolean_algebra = false;
        f.boolean_witness = "Robbins equation fails at " + pair_witness(m, a, b);
      }
    }
  return f;
}

}  // namespace qlmc
