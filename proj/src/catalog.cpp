#include "qlmc/catalog.hpp"

#include "qlmc/parser.hpp"

namespace qlmc {

namespace {

// `a <= b` abbreviates `a * b = a`; `a _|_ b` abbreviates `a * b = 0`.
constexpr std::string_view kAxiomSource = R"qlp(
# Laws of the and-then connective alone.
GCC: if x * y <= x then x * y = y * x
CA: if x * y = y * x then z * (x * y) = (z * x) * y
LCC: if (z * x) * y <= x and (z * y) * x <= y then (z * x) * y = (z * y) * x
Z_L: 0 * x = 0
Z_R: x * 0 = 0
N_L: 1 * x = x
N_R: x * 1 = x
LM: if x <= y then x * z <= y * z

# Laws tying negation to the connective.
NP_L: x _|_ !x
NP_R: !x _|_ x
RNL: if x * z <= y and x * !z <= y then x <= y
LNL: if z * x <= y and !z * x <= y then x <= y
NN: if x <= y and x * !z <= y then x * z <= y
F4: y * !(x * y) <= !x
)qlp";

constexpr std::string_view kDerivedSource = R"qlp(
# Order facts: x <= y is shorthand for x * y = x.
PO_BOT: 0 <= x
PO_TOP: x <= 1
LI: x * y <= y
REFL: x <= x
LE_COMM: if x <= y then x * y = y * x
FAC_A: if x * y = y * x then z * (y * x) = z * (x * y)
FAC_B: if x * y = y * x then (z * x) * y = (z * y) * x
CLE_L: if x * y = y * x then (z * x) * y <= x
CLE_R: if x * y = y * x then (z * y) * x <= y
P_LE: if x <= y then z * x = (z * y) * x

# Negation facts.
DNEG: !!x = x
ZERO_NEG: 0 = !1
ONE_NEG: 1 = !0
PERP_SYM: if x _|_ y then y _|_ x
LE_PERP: if x <= y then x _|_ !y
PERP_LE: if x _|_ !y then x <= y
ANTITONE: if x <= y then !y <= !x
ANTITONE_CONV: if !y <= !x then x <= y
PERP_TRANS: if x <= y and y _|_ z then x _|_ z
MEET_BOT: if y <= x and y <= !x then y = 0
JOIN_TOP: if x <= y and !x <= y then y = 1
LB_STAR: if x <= y and x <= z then x <= y * z

# Commuting elements.
COMM_STAR: if x * y = y * x and y * z = z * y and x * z = z * x then x * (y * z) = (y * z) * x
COMM_NEG: if x * y = y * x then x * !y = !y * x
PRE_ROBBINS: if x * y = y * x then !(x * y) * y <= !x
Robbins: if x * y = y * x then x = !(!(x * y) * !(x * !y))
Orthomodularity: if x <= y then y = !(!x * !(!x * y))
FN: x * !(x * y) <= !y
)qlp";

LatticeViolation violation(const FiniteOrtholattice& L, std::string law,
                           std::vector<std::size_t> elems) {
  std::string msg = law + " fails at";
  for (const std::size_t e : elems) {
    msg += ' ';
    msg += L.names[e];
  }
  return LatticeViolation{std::move(law), std::move(elems), std::move(msg)};
}

}  // namespace

const char* tier_name(Tier t) {
  switch (t) {
    case Tier::Axiom:
      return "axioms";
    case Tier::Derived:
      return "derived";
    case Tier::LatticeLemma:
      return "lattice";
  }
  return "?";
}

std::string_view axiom_source() { return kAxiomSource; }
std::string_view derived_source() { return kDerivedSource; }

// z*x <= y  implies  z*x <= z*(x^y)
std::optional<LatticeViolation> check_star_meet_bound(const FiniteOrtholattice& L) {
  for (std::size_t z = 0; z < L.n; ++z)
    for (std::size_t x = 0; x < L.n; ++x)
      for (std::size_t y = 0; y < L.n; ++y) {
        const std::size_t zx = L.star(z, x);
        if (L.le(zx, y) && !L.le(zx, L.star(z, L.meet(x, y))))
          return violation(L, "star-meet-bound", {z, x, y});
      }
  return std::nullopt;
}

// x <= y  implies  z*x = (z*y)*x
std::optional<LatticeViolation> check_star_restrict(const FiniteOrtholattice& L) {
  for (std::size_t x = 0; x < L.n; ++x)
    for (std::size_t y = 0; y < L.n; ++y) {
      if (!L.le(x, y)) continue;
      for (std::size_t z = 0; z < L.n; ++z)
        if (L.star(z, x) != L.star(L.star(z, y), x))
          return violation(L, "star-restrict", {x, y, z});
    }
  return std::nullopt;
}

// (z*x)*y <= x  implies  (z*x)*y = z*(x^y)
std::optional<LatticeViolation> check_star_meet_assoc(const FiniteOrtholattice& L) {
  for (std::size_t z = 0; z < L.n; ++z)
    for (std::size_t x = 0; x < L.n; ++x)
      for (std::size_t y = 0; y < L.n; ++y) {
        const std::size_t t = L.star(L.star(z, x), y);
        if (L.le(t, x) && t != L.star(z, L.meet(x, y)))
          return violation(L, "star-meet-assoc", {z, x, y});
      }
  return std::nullopt;
}

// z' <= x and z' <= y  imply  (xvy)*z = (x*z)v(y*z), and likewise with meet
std::optional<LatticeViolation> check_star_distrib(const FiniteOrtholattice& L) {
  for (std::size_t x = 0; x < L.n; ++x)
    for (std::size_t y = 0; y < L.n; ++y)
      for (std::size_t z = 0; z < L.n; ++z) {
        const std::size_t zc = L.ortho[z];
        if (!L.le(zc, x) || !L.le(zc, y)) continue;
        if (L.meet(L.join(x, y), z) != L.join(L.meet(x, z), L.meet(y, z)))
          return violation(L, "star-distrib", {x, y, z});
        if (L.star(L.join(x, y), z) != L.join(L.star(x, z), L.star(y, z)))
          return violation(L, "star-distrib", {x, y, z});
      }
  return std::nullopt;
}

// (xvy)^(xvy') = xv((xvy')^y)
std::optional<LatticeViolation> check_join_exchange(const FiniteOrtholattice& L) {
  for (std::size_t x = 0; x < L.n; ++x)
    for (std::size_t y = 0; y < L.n; ++y) {
      const std::size_t lhs = L.meet(L.join(x, y), L.join(x, L.ortho[y]));
      const std::size_t rhs = L.join(x, L.meet(L.join(x, L.ortho[y]), y));
      if (lhs != rhs) return violation(L, "join-exchange", {x, y});
    }
  return std::nullopt;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (auto& np : parse_qlp(kAxiomSource))
      out.push_back(CatalogEntry{np.name, Tier::Axiom, std::move(np.prop), nullptr});
    for (auto& np : parse_qlp(kDerivedSource))
      out.push_back(CatalogEntry{np.name, Tier::Derived, std::move(np.prop), nullptr});
    out.push_back(CatalogEntry{"star-meet-bound", Tier::LatticeLemma, std::nullopt,
                               check_star_meet_bound});
    out.push_back(
        CatalogEntry{"star-restrict", Tier::LatticeLemma, std::nullopt, check_star_restrict});
    out.push_back(CatalogEntry{"star-meet-assoc", Tier::LatticeLemma, std::nullopt,
                               check_star_meet_assoc});
    out.push_back(
        CatalogEntry{"star-distrib", Tier::LatticeLemma, std::nullopt, check_star_distrib});
    out.push_back(
        CatalogEntry{"join-exchange", Tier::LatticeLemma, std::nullopt, check_join_exchange});
    return out;
  }();
  return entries;
}

const CatalogEntry* find_entry(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace qlmc
