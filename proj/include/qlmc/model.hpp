#pragma once

#include <atomic>
#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qlmc/rng.hpp"
#include "qlmc/term.hpp"

namespace qlmc {

// A model is a carrier with 0, 1, negation, star and a decidable equality.
// Operations must be pure and total; equal must be an equivalence relation
// respected by all operations.
template <class M>
concept ModelLike = requires(const M& m, const typename M::Elem& e) {
  typename M::Elem;
  { m.zero() } -> std::convertible_to<typename M::Elem>;
  { m.one() } -> std::convertible_to<typename M::Elem>;
  { m.neg(e) } -> std::convertible_to<typename M::Elem>;
  { m.star(e, e) } -> std::convertible_to<typename M::Elem>;
  { m.equal(e, e) } -> std::convertible_to<bool>;
  { m.render(e) } -> std::convertible_to<std::string>;
};

// Finite models expose their carrier in a fixed index order; the order fixes
// which counterexample is "first".
template <class M>
concept EnumerableModel = ModelLike<M> && requires(const M& m, std::size_t i) {
  { m.size() } -> std::convertible_to<std::size_t>;
  { m.element(i) } -> std::convertible_to<typename M::Elem>;
};

// Samplable models draw random elements from an explicit generator state.
template <class M>
concept SamplableModel = ModelLike<M> && requires(const M& m, Rng& rng) {
  { m.sample(rng) } -> std::convertible_to<typename M::Elem>;
};

template <ModelLike M>
using Assignment = std::vector<std::pair<std::string, typename M::Elem>>;

class UnboundAtomError : public std::runtime_error {
 public:
  explicit UnboundAtomError(const std::string& atom)
      : std::runtime_error("unbound atom: " + atom), atom_(atom) {}
  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

// Structural fold of a term through the model's operations.
template <ModelLike M>
typename M::Elem eval_term(const Term& t, const M& m, const Assignment<M>& a) {
  switch (t.kind()) {
    case Term::Kind::Atom: {
      for (const auto& [name, value] : a)
        if (name == t.atom_name()) return value;
      throw UnboundAtomError(t.atom_name());
    }
    case Term::Kind::Zero:
      return m.zero();
    case Term::Kind::One:
      return m.one();
    case Term::Kind::Neg:
      return m.neg(eval_term(t.child(), m, a));
    case Term::Kind::Star:
      return m.star(eval_term(t.left(), m, a), eval_term(t.right(), m, a));
  }
  throw std::logic_error("unreachable term kind");
}

template <ModelLike M>
bool holds(const Equation& eq, const M& m, const Assignment<M>& a) {
  return m.equal(eval_term(eq.lhs, m, a), eval_term(eq.rhs, m, a));
}

// True iff some antecedent fails or the conclusion holds.
template <ModelLike M>
bool satisfies(const Prop& p, const M& m, const Assignment<M>& a) {
  for (const auto& eq : p.antecedents)
    if (!holds(eq, m, a)) return true;
  return holds(p.conclusion, m, a);
}

// A falsifying assignment: all antecedents hold, the conclusion does not.
template <ModelLike M>
struct Counterexample {
  Assignment<M> assignment;
  Equation failed_conclusion;
  typename M::Elem lhs_value;
  typename M::Elem rhs_value;
};

enum class Status { Valid, Falsified, Undecided, Skipped };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Valid:
      return "valid";
    case Status::Falsified:
      return "falsified";
    case Status::Undecided:
      return "undecided";
    case Status::Skipped:
      return "skipped";
  }
  return "?";
}

template <ModelLike M>
struct CheckResult {
  Status status;
  std::optional<Counterexample<M>> cex;
  std::string detail;  // "budget", "not-found budget=... seed=...", ...
};

struct ValidOptions {
  std::uint64_t budget = 100'000'000;  // max evaluated assignments
  unsigned jobs = 1;
};

namespace detail {

// Every returned counterexample is replayed before it leaves the checker;
// a failure here is a bug in the model or the engine, not in the input.
template <ModelLike M>
Counterexample<M> checked_cex(const Prop& p, const M& m, Assignment<M> a) {
  for (const auto& eq : p.antecedents)
    if (!holds(eq, m, a)) throw std::logic_error("counterexample replay: antecedent fails");
  auto lhs = eval_term(p.conclusion.lhs, m, a);
  auto rhs = eval_term(p.conclusion.rhs, m, a);
  if (m.equal(lhs, rhs)) throw std::logic_error("counterexample replay: conclusion holds");
  return Counterexample<M>{std::move(a), p.conclusion, std::move(lhs), std::move(rhs)};
}

// Tests the prop on one assignment; returns false when the assignment
// falsifies it.
template <ModelLike M>
bool passes(const Prop& p, const M& m, const Assignment<M>& a) {
  return satisfies(p, m, a);
}

template <ModelLike M>
Assignment<M> decode(const M& m, const std::vector<std::string>& atoms, std::uint64_t flat) {
  const std::uint64_t n = m.size();
  Assignment<M> a(atoms.size(), {std::string(), m.zero()});
  for (std::size_t i = atoms.size(); i-- > 0;) {
    a[i] = {atoms[i], m.element(static_cast<std::size_t>(flat % n))};
    flat /= n;
  }
  return a;
}

}  // namespace detail

// Exhaustive validity over every assignment of a finite model. Assignments
// are enumerated in odometer order: atoms in first-occurrence order, the
// first atom most significant, elements in the model's index order; the
// first counterexample in this order is the one returned. A carrier/atom
// combination exceeding the budget yields Undecided("budget"), never a
// silent pass.
template <EnumerableModel M>
CheckResult<M> valid_in_model(const Prop& p, const M& m, const ValidOptions& opt = {}) {
  const std::vector<std::string> atoms = atoms_of(p);
  const std::uint64_t n = m.size();
  if (n == 0) throw std::invalid_argument("model has an empty carrier");

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (total > opt.budget / n) {
      return {Status::Undecided, std::nullopt, "budget"};
    }
    total *= n;
  }
  if (total > opt.budget) return {Status::Undecided, std::nullopt, "budget"};

  const auto scan = [&](std::uint64_t lo, std::uint64_t hi,
                        const std::atomic<std::uint64_t>* cutoff) -> std::optional<std::uint64_t> {
    Assignment<M> a = detail::decode(m, atoms, lo);
    for (std::uint64_t flat = lo; flat < hi; ++flat) {
      if (cutoff && flat % 1024 == 0 && cutoff->load(std::memory_order_relaxed) < lo)
        return std::nullopt;
      if (flat != lo) {
        // odometer step: last atom cycles fastest
        std::uint64_t rem = flat;
        for (std::size_t i = atoms.size(); i-- > 0;) {
          const std::size_t digit = static_cast<std::size_t>(rem % n);
          a[i].second = m.element(digit);
          if (digit != 0) break;
          rem /= n;
        }
      }
      if (!detail::passes(p, m, a)) return flat;
    }
    return std::nullopt;
  };

  std::optional<std::uint64_t> first;
  if (opt.jobs <= 1 || total < 4096) {
    first = scan(0, total, nullptr);
  } else {
    const unsigned jobs = std::min<std::uint64_t>(opt.jobs, total);
    std::atomic<std::uint64_t> best{~std::uint64_t{0}};
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (total + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        const std::uint64_t lo = w * chunk;
        const std::uint64_t hi = std::min(total, lo + chunk);
        if (lo >= hi) return;
        if (auto hit = scan(lo, hi, &best)) {
          std::uint64_t cur = best.load();
          while (*hit < cur && !best.compare_exchange_weak(cur, *hit)) {
          }
        }
      });
    }
    for (auto& t : workers) t.join();
    if (best.load() != ~std::uint64_t{0}) first = best.load();
  }

  if (!first) return {Status::Valid, std::nullopt, ""};
  return {Status::Falsified, detail::checked_cex(p, m, detail::decode(m, atoms, *first)), ""};
}

// Deterministic falsification by enumeration (finite models): scans the same
// odometer order as valid_in_model, stopping after `budget` assignments.
// Finding nothing is reported as Undecided, never as validity.
template <EnumerableModel M>
CheckResult<M> falsify(const Prop& p, const M& m, std::uint64_t budget) {
  if (budget < 1) throw std::invalid_argument("falsify: budget must be at least 1");
  const std::vector<std::string> atoms = atoms_of(p);
  const std::uint64_t n = m.size();
  std::uint64_t total = 1;
  bool overflow = false;
  for (std::size_t i = 0; i < atoms.size() && !overflow; ++i) {
    if (total > budget / n + 1) overflow = true;
    total *= n;
  }
  const std::uint64_t limit = overflow ? budget : std::min(total, budget);

  Assignment<M> a = detail::decode(m, atoms, 0);
  for (std::uint64_t flat = 0; flat < limit; ++flat) {
    if (flat != 0) {
      std::uint64_t rem = flat;
      for (std::size_t i = atoms.size(); i-- > 0;) {
        const std::size_t digit = static_cast<std::size_t>(rem % n);
        a[i].second = m.element(digit);
        if (digit != 0) break;
        rem /= n;
      }
    }
    if (!detail::passes(p, m, a))
      return {Status::Falsified, detail::checked_cex(p, m, a), ""};
  }
  return {Status::Undecided, std::nullopt,
          "not-found budget=" + std::to_string(budget) + " (enumeration)"};
}

// Seeded random falsification (samplable models). Deterministic for a given
// seed; a larger budget with the same seed extends the same sample stream,
// so the first counterexample found never changes.
template <SamplableModel M>
CheckResult<M> falsify(const Prop& p, const M& m, std::uint64_t budget, std::uint64_t seed) {
  if (budget < 1) throw std::invalid_argument("falsify: budget must be at least 1");
  const std::vector<std::string> atoms = atoms_of(p);
  Rng rng(seed);
  for (std::uint64_t round = 0; round < budget; ++round) {
    Assignment<M> a;
    a.reserve(atoms.size());
    for (const auto& atom : atoms) a.emplace_back(atom, m.sample(rng));
    if (!detail::passes(p, m, a))
      return {Status::Falsified, detail::checked_cex(p, m, std::move(a)), ""};
  }
  return {Status::Undecided, std::nullopt,
          "not-found budget=" + std::to_string(budget) + " seed=" + std::to_string(seed)};
}

}  // namespace qlmc
