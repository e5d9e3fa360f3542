#pragma once

#include <optional>
#include <string>

#include "qlmc/finite_model.hpp"
#include "qlmc/hilbert.hpp"
#include "qlmc/lattice.hpp"

namespace qlmc {

// A model resolved from a spec string. Finite models keep their source
// lattice when they have one (the lattice-lemma tier needs meet/join).
struct ModelHandle {
  std::string spec;
  std::optional<FiniteOrtholattice> lattice;
  std::optional<FiniteModel> finite;
  std::optional<HilbertModel> hilbert;

  bool is_finite() const { return finite.has_value(); }
};

// Spec strings: boolean:K, mo:K, o6, file:PATH, hilbert:N, hilbert:N:c=C.
// Throws std::invalid_argument on a malformed spec.
ModelHandle parse_model_spec(const std::string& spec);

}  // namespace qlmc
