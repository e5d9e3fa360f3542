#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlmc/lattice.hpp"
#include "qlmc/term.hpp"

namespace qlmc {

// Axiom: the core laws every model is expected to satisfy. Derived: laws
// provable from the axioms, kept as independent checks. LatticeLemma:
// laws that mention meet/join and therefore only make sense on lattice
// models; they are native lattice checks, not DSL propositions.
enum class Tier { Axiom, Derived, LatticeLemma };

const char* tier_name(Tier t);

using LatticeCheck = std::function<std::optional<LatticeViolation>(const FiniteOrtholattice&)>;

struct CatalogEntry {
  std::string name;
  Tier tier;
  std::optional<Prop> prop;    // Axiom / Derived
  LatticeCheck lattice_check;  // LatticeLemma
};

// The named property catalog, in a fixed order: axioms, derived laws,
// lattice lemmas. DSL-backed entries are parsed once from the embedded
// sources below.
const std::vector<CatalogEntry>& catalog();

const CatalogEntry* find_entry(std::string_view name);

// Embedded .qlp sources for the DSL-backed tiers.
std::string_view axiom_source();
std::string_view derived_source();

// Exhaustive lattice-lemma checks (Finch star over an ortholattice).
std::optional<LatticeViolation> check_star_meet_bound(const FiniteOrtholattice& L);
std::optional<LatticeViolation> check_star_restrict(const FiniteOrtholattice& L);
std::optional<LatticeViolation> check_star_meet_assoc(const FiniteOrtholattice& L);
std::optional<LatticeViolation> check_star_distrib(const FiniteOrtholattice& L);
std::optional<LatticeViolation> check_join_exchange(const FiniteOrtholattice& L);

}  // namespace qlmc
