#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qlmc/rational.hpp"

namespace qlmc {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

// A linear subspace of Q^n held in reduced row-echelon canonical form:
// pivot entries are 1, pivot columns are otherwise zero, pivots move right
// row by row, no zero rows. The canonical form is unique per subspace, so
// structural equality decides subspace equality.
class RationalSubspace {
 public:
  static RationalSubspace zero(std::size_t ambient);
  static RationalSubspace full(std::size_t ambient);
  // Canonicalizes; dependent input vectors are fine and collapse.
  static RationalSubspace span(std::size_t ambient, RationalMatrix vectors);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const RationalMatrix& basis() const { return rows_; }

  bool contains(const RationalVector& v) const;
  bool contains(const RationalSubspace& sub) const;

  bool operator==(const RationalSubspace& other) const {
    return ambient_ == other.ambient_ && rows_ == other.rows_;
  }
  bool operator!=(const RationalSubspace& other) const { return !(*this == other); }

  // span[(1,0),(0,1)] with integer or p/q coordinates; span[] for the zero
  // subspace.
  std::string render() const;

 private:
  RationalSubspace(std::size_t ambient, RationalMatrix rows)
      : ambient_(ambient), rows_(std::move(rows)) {}

  std::size_t ambient_;
  RationalMatrix rows_;  // RREF
};

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& rows);

// Orthogonal complement under the standard dot product.
RationalSubspace complement(const RationalSubspace& a);

RationalSubspace sum(const RationalSubspace& a, const RationalSubspace& b);

// Intersection by a direct kernel solve on stacked bases.
RationalSubspace intersect(const RationalSubspace& a, const RationalSubspace& b);

// Intersection as (A' + B')'; an independent second route that must agree
// with `intersect` everywhere.
RationalSubspace intersect_via_complements(const RationalSubspace& a, const RationalSubspace& b);

// Image of A under orthogonal projection onto B, computed as (A + B') ^ B.
RationalSubspace project(const RationalSubspace& a, const RationalSubspace& onto);

// Same image computed from the explicit projector matrix Bt (B Bt)^-1 B;
// kept as an independent oracle for `project`.
RationalSubspace projection_oracle(const RationalSubspace& a, const RationalSubspace& onto);

// Parses the render() format. `ambient` is required only when the literal
// lists no vectors.
RationalSubspace parse_subspace(std::string_view text, std::size_t ambient = 0);

}  // namespace qlmc
