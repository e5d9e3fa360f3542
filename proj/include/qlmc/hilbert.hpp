#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlmc/finite_model.hpp"
#include "qlmc/rng.hpp"
#include "qlmc/subspace.hpp"

namespace qlmc {

// The space of ALL subspaces of Q^n as a model: one = the whole space,
// zero = the null subspace, neg = orthogonal complement, star = projection
// of the left subspace onto the right one. In finite dimension every
// subspace is closed and the projection of a subspace is a subspace, so the
// family is closed under all three operations wholesale.
//
// The carrier is infinite: the model is samplable, not enumerable. The
// sampler draws a dimension r uniform on 0..n, then r integer vectors with
// coordinates in [-coord_bound, coord_bound], rejecting dependent sets.
struct HilbertModel {
  using Elem = RationalSubspace;

  std::size_t dim = 2;
  long long coord_bound = 5;
  std::string id;

  Elem zero() const { return RationalSubspace::zero(dim); }
  Elem one() const { return RationalSubspace::full(dim); }
  Elem neg(const Elem& a) const { return complement(a); }
  Elem star(const Elem& a, const Elem& b) const { return project(a, b); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  std::string render(const Elem& e) const { return e.render(); }

  Elem sample(Rng& rng) const;
};

HilbertModel make_hilbert(std::size_t dim, long long coord_bound = 5);

struct PFamily {
  std::size_t ambient = 0;
  std::vector<RationalSubspace> members;
  bool closed = false;
};

// Closes `seeds` plus the full space under complement and pairwise
// projection. Stops reporting closed=false once the family would exceed
// max_members; a closed result is a genuine finite P-family.
PFamily pfamily_closure(std::size_t ambient, std::vector<RationalSubspace> seeds,
                        std::size_t max_members = 256);

// Direct re-check of the three P-family conditions; returns the violated
// condition, or nullopt when the family is a P-family.
std::optional<std::string> check_pfamily(std::size_t ambient,
                                         const std::vector<RationalSubspace>& members);

// Tabulates a closed family into an enumerable model.
FiniteModel family_model(const PFamily& family);

}  // namespace qlmc
