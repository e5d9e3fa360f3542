#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qlmc {

// An explicit finite model: named elements addressed by index, with lookup
// tables for negation and star. Immutable after construction.
struct FiniteModel {
  using Elem = std::size_t;

  std::string id;
  std::vector<std::string> names;
  std::size_t zero_idx = 0;
  std::size_t one_idx = 0;
  std::vector<std::size_t> neg_table;   // size n
  std::vector<std::size_t> star_table;  // size n*n, row-major

  std::size_t size() const { return names.size(); }
  Elem element(std::size_t i) const { return i; }
  Elem zero() const { return zero_idx; }
  Elem one() const { return one_idx; }
  Elem neg(Elem a) const { return neg_table[a]; }
  Elem star(Elem a, Elem b) const { return star_table[a * size() + b]; }
  bool equal(Elem a, Elem b) const { return a == b; }
  const std::string& render(Elem a) const { return names[a]; }

  std::optional<std::size_t> index_of(std::string_view name) const;

  // Table sizes and index ranges; throws std::invalid_argument on failure.
  void validate() const;
};

// Least superset of `seeds` plus {0, 1} closed under neg and star.
// Returns sorted element indices.
std::vector<std::size_t> generated_subalgebra(const FiniteModel& m,
                                              const std::vector<std::size_t>& seeds);

// Restriction of the model to a closed element set (as produced by
// generated_subalgebra); throws if the set is not closed.
FiniteModel submodel(const FiniteModel& m, const std::vector<std::size_t>& closed);

}  // namespace qlmc
