#include "qlmc/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace qlmc {

HilbertModel make_hilbert(std::size_t dim, long long coord_bound) {
  if (dim < 1) throw std::invalid_argument("hilbert: dimension must be >= 1");
  if (coord_bound < 1) throw std::invalid_argument("hilbert: coordinate bound must be >= 1");
  HilbertModel m;
  m.dim = dim;
  m.coord_bound = coord_bound;
  m.id = "hilbert:" + std::to_string(dim);
  if (coord_bound != 5) m.id += ":c=" + std::to_string(coord_bound);
  return m;
}

RationalSubspace HilbertModel::sample(Rng& rng) const {
  const std::size_t r = static_cast<std::size_t>(rng.below(dim + 1));
  if (r == 0) return RationalSubspace::zero(dim);
  while (true) {
    RationalMatrix vectors(r, RationalVector(dim, Rational(0)));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        vectors[i][j] = Rational(rng.range(-coord_bound, coord_bound));
    RationalSubspace s = RationalSubspace::span(dim, std::move(vectors));
    if (s.dim() == r) return s;
  }
}

PFamily pfamily_closure(std::size_t ambient, std::vector<RationalSubspace> seeds,
                        std::size_t max_members) {
  PFamily fam;
  fam.ambient = ambient;
  fam.members.push_back(RationalSubspace::full(ambient));
  const auto add = [&fam](RationalSubspace s) {
    for (const auto& have : fam.members)
      if (have == s) return false;
    fam.members.push_back(std::move(s));
    return true;
  };
  for (auto& s : seeds) {
    if (s.ambient_dim() != ambient)
      throw std::invalid_argument("pfamily: seed ambient dimension mismatch");
    add(std::move(s));
  }

  while (true) {
    bool grew = false;
    const std::size_t frozen = fam.members.size();
    for (std::size_t i = 0; i < frozen; ++i)
      grew |= add(complement(fam.members[i]));
    for (std::size_t i = 0; i < frozen; ++i)
      for (std::size_t j = 0; j < frozen; ++j)
        grew |= add(project(fam.members[i], fam.members[j]));
    if (!grew) {
      fam.closed = true;
      return fam;
    }
    if (fam.members.size() > max_members) {
      fam.closed = false;
      return fam;
    }
  }
}

std::optional<std::string> check_pfamily(std::size_t ambient,
                                         const std::vector<RationalSubspace>& members) {
  const auto have = [&members](const RationalSubspace& s) {
    return std::find(members.begin(), members.end(), s) != members.end();
  };
  if (!have(RationalSubspace::full(ambient))) return "the whole space is missing";
  for (const auto& a : members)
    if (!have(complement(a))) return "not closed under complement at " + a.render();
  for (const auto& a : members)
    for (const auto& b : members)
      if (!have(project(a, b)))
        return "not closed under projection at " + a.render() + " onto " + b.render();
  return std::nullopt;
}

FiniteModel family_model(const PFamily& family) {
  if (!family.closed) throw std::invalid_argument("family_model: family is not closed");
  const auto& ms = family.members;
  const auto index_of = [&ms](const RationalSubspace& s) {
    for (std::size_t i = 0; i < ms.size(); ++i)
      if (ms[i] == s) return i;
    throw std::logic_error("family_model: closure left the family");
  };

  FiniteModel m;
  m.id = "pfamily:" + std::to_string(family.ambient) + "d";
  for (const auto& s : ms) m.names.push_back(s.render());
  m.zero_idx = index_of(RationalSubspace::zero(family.ambient));
  m.one_idx = index_of(RationalSubspace::full(family.ambient));
  m.neg_table.resize(ms.size());
  m.star_table.resize(ms.size() * ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    m.neg_table[i] = index_of(complement(ms[i]));
    for (std::size_t j = 0; j < ms.size(); ++j)
      m.star_table[i * ms.size() + j] = index_of(project(ms[i], ms[j]));
  }
  m.validate();
  return m;
}

}  // namespace qlmc
