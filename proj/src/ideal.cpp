#include "qlmc/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace qlmc {

namespace {

std::vector<std::uint8_t> to_mask(const FiniteModel& m, const ElemSet& members) {
  std::vector<std::uint8_t> mask(m.size(), 0);
  for (const std::size_t e : members) {
    if (e >= m.size()) throw std::invalid_argument("ideal: element out of range");
    mask[e] = 1;
  }
  return mask;
}

struct MaskOps {
  const FiniteModel& m;
  const std::vector<std::uint8_t>& mask;

  bool in(std::size_t e) const { return mask[e] != 0; }
  bool leq(std::size_t a, std::size_t b) const { return in(m.star(a, m.neg(b))); }
  bool sim(std::size_t a, std::size_t b) const { return leq(a, b) && leq(b, a); }
};

std::string names(const FiniteModel& m, std::initializer_list<std::size_t> elems) {
  std::string out = "(";
  bool first = true;
  for (const std::size_t e : elems) {
    if (!first) out += ", ";
    first = false;
    out += m.names[e];
  }
  out += ")";
  return out;
}

}  // namespace

std::optional<IdealViolation> is_ideal(const FiniteModel& m, const ElemSet& members) {
  const std::vector<std::uint8_t> mask = to_mask(m, members);
  const MaskOps ops{m, mask};
  const std::size_t n = m.size();

  if (!ops.in(m.zero())) return IdealViolation{1, "0 is not a member"};

  for (std::size_t x = 0; x < n; ++x) {
    if (!ops.in(x)) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if (!ops.in(m.star(x, y)))
        return IdealViolation{2, names(m, {x, y}) + ": x * y escapes"};
      if (!ops.in(m.star(y, x)))
        return IdealViolation{2, names(m, {x, y}) + ": y * x escapes"};
    }
  }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!ops.in(m.star(x, y))) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (ops.in(m.star(z, m.neg(y))) && !ops.in(m.star(x, z)))
          return IdealViolation{3, names(m, {x, y, z})};
    }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t xy = m.star(x, y);
      if (ops.leq(xy, x) && !ops.sim(xy, m.star(y, x)))
        return IdealViolation{4, names(m, {x, y})};
    }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!ops.sim(m.star(x, y), m.star(y, x))) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (!ops.sim(m.star(m.star(z, x), y), m.star(z, m.star(x, y))))
          return IdealViolation{5, names(m, {x, y, z})};
    }

  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t zxy = m.star(m.star(z, x), y);
        const std::size_t zyx = m.star(m.star(z, y), x);
        if (ops.leq(zxy, x) && ops.leq(zyx, y) && !ops.sim(zxy, zyx))
          return IdealViolation{6, names(m, {z, x, y})};
      }

  return std::nullopt;
}

bool leq_I(const FiniteModel& m, const ElemSet& members, std::size_t a, std::size_t b) {
  const std::vector<std::uint8_t> mask = to_mask(m, members);
  return MaskOps{m, mask}.leq(a, b);
}

bool sim_I(const FiniteModel& m, const ElemSet& members, std::size_t a, std::size_t b) {
  const std::vector<std::uint8_t> mask = to_mask(m, members);
  return MaskOps{m, mask}.sim(a, b);
}

std::optional<CongruenceViolation> is_congruence(const FiniteModel& m, const BinaryRelation& r) {
  const std::size_t n = m.size();
  if (r.n != n || r.rel.size() != n * n)
    throw std::invalid_argument("congruence: relation size mismatch");

  for (std::size_t a = 0; a < n; ++a)
    if (!r.at(a, a)) return CongruenceViolation{"reflexive", m.names[a]};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (r.at(a, b) && !r.at(b, a))
        return CongruenceViolation{"symmetric", names(m, {a, b})};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!r.at(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (r.at(b, c) && !r.at(a, c)) return CongruenceViolation{"transitive", names(m, {a, b, c})};
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (r.at(a, b) && !r.at(m.neg(a), m.neg(b)))
        return CongruenceViolation{"neg", names(m, {a, b})};
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2) {
      if (!r.at(x1, x2)) continue;
      for (std::size_t y1 = 0; y1 < n; ++y1)
        for (std::size_t y2 = 0; y2 < n; ++y2)
          if (r.at(y1, y2) && !r.at(m.star(x1, y1), m.star(x2, y2)))
            return CongruenceViolation{"star", names(m, {x1, y1, x2, y2})};
    }
  return std::nullopt;
}

BinaryRelation congruence_from_ideal(const FiniteModel& m, const ElemSet& members) {
  if (const auto v = is_ideal(m, members))
    throw std::invalid_argument("congruence_from_ideal: not an ideal (condition " +
                                std::to_string(v->condition) + " at " + v->witness + ")");
  const std::vector<std::uint8_t> mask = to_mask(m, members);
  const MaskOps ops{m, mask};
  const std::size_t n = m.size();

  BinaryRelation r;
  r.n = n;
  r.rel.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) r.set(a, b, ops.sim(a, b));

  // theorem assertions: the relation is a congruence and the class of zero
  // is exactly the ideal
  if (const auto v = is_congruence(m, r))
    throw std::logic_error("congruence_from_ideal: ~I is not a congruence (" + v->law + " at " +
                           v->witness + ")");
  for (std::size_t a = 0; a < n; ++a)
    if (r.at(a, m.zero()) != (mask[a] != 0))
      throw std::logic_error("congruence_from_ideal: class of 0 differs from the ideal at " +
                             m.names[a]);
  return r;
}

std::optional<HomViolation> is_homomorphism(const Homomorphism& h) {
  const std::size_t n = h.source.size();
  if (h.map.size() != n) throw std::invalid_argument("homomorphism: map not total");
  for (const std::size_t v : h.map)
    if (v >= h.target.size()) throw std::invalid_argument("homomorphism: map out of range");

  if (h.map[h.source.zero()] != h.target.zero()) return HomViolation{"zero", ""};
  if (h.map[h.source.one()] != h.target.one()) return HomViolation{"one", ""};
  for (std::size_t a = 0; a < n; ++a)
    if (h.map[h.source.neg(a)] != h.target.neg(h.map[a]))
      return HomViolation{"neg", h.source.names[a]};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (h.map[h.source.star(a, b)] != h.target.star(h.map[a], h.map[b]))
        return HomViolation{"star", names(h.source, {a, b})};
  return std::nullopt;
}

ElemSet kernel(const Homomorphism& h) {
  ElemSet out;
  for (std::size_t a = 0; a < h.source.size(); ++a)
    if (h.map[a] == h.target.zero()) out.push_back(a);
  return out;
}

Quotient quotient(const FiniteModel& m, const ElemSet& members) {
  const BinaryRelation r = congruence_from_ideal(m, members);
  const std::size_t n = m.size();

  // classes in first-member order
  std::vector<std::size_t> class_of(n, n);
  std::vector<ElemSet> classes;
  for (std::size_t a = 0; a < n; ++a) {
    if (class_of[a] != n) continue;
    const std::size_t id = classes.size();
    classes.push_back({});
    for (std::size_t b = a; b < n; ++b)
      if (r.at(a, b)) {
        class_of[b] = id;
        classes[id].push_back(b);
      }
  }

  FiniteModel q;
  q.id = m.id + "/I";
  for (const auto& cls : classes) {
    std::string name = "{";
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i > 0) name += ",";
      name += m.names[cls[i]];
    }
    name += "}";
    q.names.push_back(std::move(name));
  }
  q.zero_idx = class_of[m.zero()];
  q.one_idx = class_of[m.one()];

  const std::size_t k = classes.size();
  q.neg_table.assign(k, 0);
  q.star_table.assign(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t rep = classes[i][0];
    q.neg_table[i] = class_of[m.neg(rep)];
    for (const std::size_t x : classes[i])
      if (class_of[m.neg(x)] != q.neg_table[i])
        throw std::logic_error("quotient: neg not well defined on class " + q.names[i]);
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t value = class_of[m.star(rep, classes[j][0])];
      q.star_table[i * k + j] = value;
      for (const std::size_t x : classes[i])
        for (const std::size_t y : classes[j])
          if (class_of[m.star(x, y)] != value)
            throw std::logic_error("quotient: star not well defined on classes " + q.names[i] +
                                   ", " + q.names[j]);
    }
  }
  q.validate();

  Homomorphism proj{m, q, class_of};
  if (const auto v = is_homomorphism(proj))
    throw std::logic_error("quotient: projection is not a homomorphism (" + v->law + ")");

  return Quotient{std::move(q), std::move(proj), std::move(classes)};
}

std::vector<ElemSet> enumerate_ideals(const FiniteModel& m) {
  const std::size_t n = m.size();
  if (n > 16) throw std::invalid_argument("enumerate_ideals: carrier larger than 16");

  // every candidate contains 0; enumerate subsets of the remaining elements
  std::vector<std::size_t> rest;
  for (std::size_t a = 0; a < n; ++a)
    if (a != m.zero()) rest.push_back(a);

  std::vector<ElemSet> out;
  const std::size_t combos = std::size_t{1} << rest.size();
  for (std::size_t bits = 0; bits < combos; ++bits) {
    ElemSet members{m.zero()};
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (bits & (std::size_t{1} << i)) members.push_back(rest[i]);
    std::sort(members.begin(), members.end());
    if (!is_ideal(m, members)) out.push_back(std::move(members));
  }
  return out;
}

}  // namespace qlmc
