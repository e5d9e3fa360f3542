#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qlmc/finite_model.hpp"

namespace qlmc {

// Construction or import failure; `invariant()` names the violated law.
class LatticeError : public std::runtime_error {
 public:
  LatticeError(std::string invariant, const std::string& message)
      : std::runtime_error(message), invariant_(std::move(invariant)) {}
  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

// A finite bounded lattice with an orthocomplementation. `leq` is the order
// matrix; meet/join tables are derived at build time and every pair is
// required to have a unique meet and join. `ortho` is an order-reversing
// involution with a ^ a' = bottom and a v a' = top.
struct FiniteOrtholattice {
  std::string id;
  std::size_t n = 0;
  std::vector<std::string> names;
  std::vector<std::uint8_t> leq_table;  // n*n
  std::vector<std::size_t> ortho;       // n
  std::vector<std::size_t> meet_table;  // n*n, derived
  std::vector<std::size_t> join_table;  // n*n, derived
  std::size_t bottom = 0;
  std::size_t top = 0;

  bool le(std::size_t a, std::size_t b) const { return leq_table[a * n + b] != 0; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_table[a * n + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_table[a * n + b]; }

  // Finch's operation: (a v b') ^ b.
  std::size_t star(std::size_t a, std::size_t b) const {
    return meet(join(a, ortho[b]), b);
  }
};

// Validates the order, derives meet/join/bounds, checks the
// orthocomplementation laws. Throws LatticeError naming the failed
// invariant.
FiniteOrtholattice make_lattice(std::string id, std::vector<std::string> names,
                                std::vector<std::uint8_t> leq, std::vector<std::size_t> ortho);

struct BooleanSpec {
  unsigned atoms;  // 2^atoms elements
};
struct MOSpec {
  unsigned pairs;  // 2*pairs + 2 elements
};
struct O6Spec {};
struct CustomSpec {
  std::string path;  // JSON file
};
using LatticeSpec = std::variant<BooleanSpec, MOSpec, O6Spec, CustomSpec>;

// Builtin models: Boolean(k) is the powerset of k atoms named by bitstrings;
// MO(k) is the "Chinese lantern" with k incomparable complementary pairs;
// O6 is the non-orthomodular hexagon used as a negative control.
FiniteOrtholattice build(const LatticeSpec& spec);

// Custom lattice JSON: {"names": [...], "leq": [[0/1,...],...],
// "ortho": [indices]}; bottom/top are inferred.
FiniteOrtholattice lattice_from_json(const std::string& json_text, const std::string& id);
FiniteOrtholattice lattice_from_json_file(const std::string& path);

struct LatticeViolation {
  std::string law;
  std::vector<std::size_t> elems;
  std::string message;
};

// Re-checks the orthocomplementation laws on a built lattice.
std::optional<LatticeViolation> check_ortholattice(const FiniteOrtholattice& L);

// a <= b  implies  b = a v (a' ^ b).
std::optional<LatticeViolation> check_orthomodular(const FiniteOrtholattice& L);

// a <= b  implies  a v (c ^ b) = (a v c) ^ b.
std::optional<LatticeViolation> check_modular(const FiniteOrtholattice& L);

// The lattice as a model: zero=bottom, one=top, neg=ortho, star=Finch star.
FiniteModel as_model(const FiniteOrtholattice& L);

}  // namespace qlmc
