#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlmc/catalog.hpp"
#include "qlmc/finite_model.hpp"
#include "qlmc/hilbert.hpp"
#include "qlmc/lattice.hpp"
#include "qlmc/report.hpp"

namespace qlmc {

struct TierSet {
  bool axioms = true;
  bool derived = true;
  bool lattice = true;
};

struct SuiteOptions {
  TierSet tiers{};
  std::uint64_t finite_budget = 100'000'000;
  std::uint64_t sample_budget = 10'000;
  std::uint64_t seed = 0;  // samplable models only
  unsigned jobs = 1;
};

// Runs the catalog against a finite model; DSL tiers go through exhaustive
// validity, the lattice tier runs when the model's lattice is supplied and
// is reported skipped otherwise.
SuiteReport run_suite(const FiniteModel& m, const FiniteOrtholattice* lattice,
                      const SuiteOptions& opt = {});

// Runs the DSL tiers by seeded falsification; lattice-lemma entries are
// skipped (no meet/join on a sampled carrier).
SuiteReport run_suite(const HilbertModel& m, const SuiteOptions& opt);

// The order checks that are not expressible as single propositions:
// materializes a <= b iff a*b = a, asserts it is a partial order, that
// star is the glb and !(!a*!b) the lub of every commuting pair, and that
// b is the lub of a and !a*b whenever a <= b.
struct StructuralCheck {
  std::string name;
  bool ok = true;
  std::string witness;
};
std::vector<StructuralCheck> run_structural(const FiniteModel& m);

// Global shape of the connective, each failure with a witness. On any model
// satisfying the axiom tier the four flags agree.
struct ClassificationFlags {
  bool commutative = true;
  bool associative = true;
  bool monotone = true;
  bool boolean_algebra = true;
  std::string commutative_witness;
  std::string associative_witness;
  std::string monotone_witness;
  std::string boolean_witness;

  bool all_equal() const {
    return commutative == associative && associative == monotone &&
           monotone == boolean_algebra;
  }
};
ClassificationFlags classify(const FiniteModel& m);

}  // namespace qlmc
