#include "qlmc/lattice.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qlmc {

namespace {

// Unique minimum of a nonempty candidate set under leq, or npos.
std::size_t least_of(const std::vector<std::uint8_t>& leq, std::size_t n,
                     const std::vector<std::size_t>& candidates) {
  for (const std::size_t c : candidates) {
    bool below_all = true;
    for (const std::size_t d : candidates) {
      if (!leq[c * n + d]) {
        below_all = false;
        break;
      }
    }
    if (below_all) return c;
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

FiniteOrtholattice make_lattice(std::string id, std::vector<std::string> names,
                                std::vector<std::uint8_t> leq, std::vector<std::size_t> ortho) {
  const std::size_t n = names.size();
  if (n == 0) throw LatticeError("nonempty", "lattice must have at least one element");
  if (leq.size() != n * n) throw LatticeError("leq-shape", "leq must be an n x n matrix");
  if (ortho.size() != n) throw LatticeError("ortho-shape", "ortho must list n indices");
  {
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != n) throw LatticeError("names-distinct", "element names must be distinct");
  }

  const auto le = [&](std::size_t a, std::size_t b) { return leq[a * n + b] != 0; };

  for (std::size_t a = 0; a < n; ++a)
    if (!le(a, a)) throw LatticeError("reflexive", "leq not reflexive at " + names[a]);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && le(a, b) && le(b, a))
        throw LatticeError("antisymmetric",
                           "leq not antisymmetric at " + names[a] + ", " + names[b]);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!le(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (le(b, c) && !le(a, c))
          throw LatticeError("transitive", "leq not transitive at " + names[a] + " <= " +
                                               names[b] + " <= " + names[c]);
    }

  FiniteOrtholattice L;
  L.id = std::move(id);
  L.n = n;
  L.names = std::move(names);
  L.leq_table = std::move(leq);
  L.ortho = std::move(ortho);

  // bounds
  std::size_t bottom = static_cast<std::size_t>(-1), top = static_cast<std::size_t>(-1);
  for (std::size_t a = 0; a < n; ++a) {
    bool is_bottom = true, is_top = true;
    for (std::size_t b = 0; b < n; ++b) {
      if (!L.le(a, b)) is_bottom = false;
      if (!L.le(b, a)) is_top = false;
    }
    if (is_bottom) bottom = a;
    if (is_top) top = a;
  }
  if (bottom == static_cast<std::size_t>(-1))
    throw LatticeError("bottom", "no global bottom element");
  if (top == static_cast<std::size_t>(-1)) throw LatticeError("top", "no global top element");
  L.bottom = bottom;
  L.top = top;

  // meet/join tables; reject posets where some pair lacks a unique one
  L.meet_table.assign(n * n, 0);
  L.join_table.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::size_t> lower, upper;
      for (std::size_t c = 0; c < n; ++c) {
        if (L.le(c, a) && L.le(c, b)) lower.push_back(c);
        if (L.le(a, c) && L.le(b, c)) upper.push_back(c);
      }
      // greatest lower bound = unique maximum of `lower`
      std::size_t glb = static_cast<std::size_t>(-1);
      for (const std::size_t c : lower) {
        bool above_all = true;
        for (const std::size_t d : lower)
          if (!L.le(d, c)) {
            above_all = false;
            break;
          }
        if (above_all) glb = c;
      }
      const std::size_t lub = least_of(L.leq_table, n, upper);
      if (glb == static_cast<std::size_t>(-1))
        throw LatticeError("meet-unique",
                           "no meet for " + L.names[a] + ", " + L.names[b]);
      if (lub == static_cast<std::size_t>(-1))
        throw LatticeError("join-unique",
                           "no join for " + L.names[a] + ", " + L.names[b]);
      L.meet_table[a * n + b] = glb;
      L.join_table[a * n + b] = lub;
    }

  for (const std::size_t v : L.ortho)
    if (v >= n) throw LatticeError("ortho-range", "ortho index out of range");
  if (auto v = check_ortholattice(L)) throw LatticeError(v->law, v->message);
  return L;
}

std::optional<LatticeViolation> check_ortholattice(const FiniteOrtholattice& L) {
  for (std::size_t a = 0; a < L.n; ++a)
    if (L.ortho[L.ortho[a]] != a)
      return LatticeViolation{"ortho-involution", {a}, "ortho not an involution at " + L.names[a]};
  for (std::size_t a = 0; a < L.n; ++a)
    for (std::size_t b = 0; b < L.n; ++b)
      if (L.le(a, b) && !L.le(L.ortho[b], L.ortho[a]))
        return LatticeViolation{"ortho-antitone",
                                {a, b},
                                "ortho not order-reversing at " + L.names[a] + " <= " + L.names[b]};
  for (std::size_t a = 0; a < L.n; ++a) {
    if (L.meet(a, L.ortho[a]) != L.bottom)
      return LatticeViolation{"complement-meet", {a}, L.names[a] + " ^ " + L.names[L.ortho[a]] +
                                                          " is not bottom"};
    if (L.join(a, L.ortho[a]) != L.top)
      return LatticeViolation{"complement-join", {a}, L.names[a] + " v " + L.names[L.ortho[a]] +
                                                          " is not top"};
  }
  return std::nullopt;
}

std::optional<LatticeViolation> check_orthomodular(const FiniteOrtholattice& L) {
  for (std::size_t a = 0; a < L.n; ++a)
    for (std::size_t b = 0; b < L.n; ++b) {
      if (!L.le(a, b)) continue;
      if (L.join(a, L.meet(L.ortho[a], b)) != b)
        return LatticeViolation{"orthomodular",
                                {a, b},
                                L.names[a] + " <= " + L.names[b] + " but " + L.names[a] + " v (" +
                                    L.names[L.ortho[a]] + " ^ " + L.names[b] + ") = " +
                                    L.names[L.join(a, L.meet(L.ortho[a], b))]};
    }
  return std::nullopt;
}

std::optional<LatticeViolation> check_modular(const FiniteOrtholattice& L) {
  for (std::size_t a = 0; a < L.n; ++a)
    for (std::size_t b = 0; b < L.n; ++b) {
      if (!L.le(a, b)) continue;
      for (std::size_t c = 0; c < L.n; ++c)
        if (L.join(a, L.meet(c, b)) != L.meet(L.join(a, c), b))
          return LatticeViolation{
              "modular",
              {a, b, c},
              L.names[a] + " <= " + L.names[b] + ", c = " + L.names[c] + ": a v (c ^ b) = " +
                  L.names[L.join(a, L.meet(c, b))] + " but (a v c) ^ b = " +
                  L.names[L.meet(L.join(a, c), b)]};
    }
  return std::nullopt;
}

FiniteModel as_model(const FiniteOrtholattice& L) {
  FiniteModel m;
  m.id = L.id;
  m.names = L.names;
  m.zero_idx = L.bottom;
  m.one_idx = L.top;
  m.neg_table = L.ortho;
  m.star_table.resize(L.n * L.n);
  for (std::size_t a = 0; a < L.n; ++a)
    for (std::size_t b = 0; b < L.n; ++b) m.star_table[a * L.n + b] = L.star(a, b);
  m.validate();
  return m;
}

namespace {

FiniteOrtholattice build_boolean(unsigned k) {
  if (k > 16) throw LatticeError("size", "boolean:k supports k <= 16");
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> names(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::string name(k, '0');
    for (unsigned i = 0; i < k; ++i)
      if (s & (std::size_t{1} << i)) name[i] = '1';
    names[s] = k == 0 ? "1" : name;  // boolean:0 is the one-point algebra
  }
  std::vector<std::uint8_t> leq(n * n, 0);
  std::vector<std::size_t> ortho(n);
  const std::size_t full = n - 1;
  for (std::size_t a = 0; a < n; ++a) {
    ortho[a] = full & ~a;
    for (std::size_t b = 0; b < n; ++b) leq[a * n + b] = ((a & b) == a) ? 1 : 0;
  }
  return make_lattice("boolean:" + std::to_string(k), std::move(names), std::move(leq),
                      std::move(ortho));
}

FiniteOrtholattice build_mo(unsigned k) {
  if (k < 1) throw LatticeError("size", "mo:k requires k >= 1");
  if (k > 26) throw LatticeError("size", "mo:k supports k <= 26");
  const std::size_t n = 2 * k + 2;
  std::vector<std::string> names(n);
  names[0] = "0";
  names[n - 1] = "1";
  for (unsigned i = 0; i < k; ++i) {
    const char letter = static_cast<char>('a' + i);
    names[1 + 2 * i] = std::string(1, letter);
    names[2 + 2 * i] = std::string(1, letter) + "'";
  }
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    leq[a * n + a] = 1;
    leq[0 * n + a] = 1;
    leq[a * n + (n - 1)] = 1;
  }
  std::vector<std::size_t> ortho(n);
  ortho[0] = n - 1;
  ortho[n - 1] = 0;
  for (unsigned i = 0; i < k; ++i) {
    ortho[1 + 2 * i] = 2 + 2 * i;
    ortho[2 + 2 * i] = 1 + 2 * i;
  }
  return make_lattice("mo:" + std::to_string(k), std::move(names), std::move(leq),
                      std::move(ortho));
}

FiniteOrtholattice build_o6() {
  // 0 < x < y' < 1 and 0 < y < x' < 1; x,y incomparable.
  const std::vector<std::string> names = {"0", "x", "y", "x'", "y'", "1"};
  const std::size_t n = 6;
  enum { B = 0, X = 1, Y = 2, XC = 3, YC = 4, T = 5 };
  std::vector<std::uint8_t> leq(n * n, 0);
  const auto set = [&](std::size_t a, std::size_t b) { leq[a * n + b] = 1; };
  for (std::size_t a = 0; a < n; ++a) {
    set(a, a);
    set(B, a);
    set(a, T);
  }
  set(X, YC);
  set(Y, XC);
  std::vector<std::size_t> ortho = {T, XC, YC, X, Y, B};
  return make_lattice("o6", names, std::move(leq), std::move(ortho));
}

}  // namespace

FiniteOrtholattice build(const LatticeSpec& spec) {
  return std::visit(
      [](const auto& s) -> FiniteOrtholattice {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, BooleanSpec>) {
          return build_boolean(s.atoms);
        } else if constexpr (std::is_same_v<T, MOSpec>) {
          return build_mo(s.pairs);
        } else if constexpr (std::is_same_v<T, O6Spec>) {
          return build_o6();
        } else {
          return lattice_from_json_file(s.path);
        }
      },
      spec);
}

FiniteOrtholattice lattice_from_json(const std::string& json_text, const std::string& id) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw LatticeError("json", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("names") || !doc.contains("leq") ||
      !doc.contains("ortho"))
    throw LatticeError("json-shape", "lattice JSON needs \"names\", \"leq\" and \"ortho\"");

  std::vector<std::string> names;
  for (const auto& v : doc["names"]) {
    if (!v.is_string()) throw LatticeError("json-shape", "names must be strings");
    names.push_back(v.get<std::string>());
  }
  const std::size_t n = names.size();

  std::vector<std::uint8_t> leq;
  leq.reserve(n * n);
  if (!doc["leq"].is_array() || doc["leq"].size() != n)
    throw LatticeError("json-shape", "leq must be an n x n matrix");
  for (const auto& row : doc["leq"]) {
    if (!row.is_array() || row.size() != n)
      throw LatticeError("json-shape", "leq must be an n x n matrix");
    for (const auto& v : row) {
      if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1))
        throw LatticeError("json-shape", "leq entries must be 0 or 1");
      leq.push_back(static_cast<std::uint8_t>(v.get<int>()));
    }
  }

  std::vector<std::size_t> ortho;
  if (!doc["ortho"].is_array() || doc["ortho"].size() != n)
    throw LatticeError("json-shape", "ortho must list n indices");
  for (const auto& v : doc["ortho"]) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
      throw LatticeError("json-shape", "ortho entries must be nonnegative indices");
    ortho.push_back(v.get<std::size_t>());
  }

  return make_lattice(id, std::move(names), std::move(leq), std::move(ortho));
}

FiniteOrtholattice lattice_from_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LatticeError("file", "cannot open lattice file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return lattice_from_json(buf.str(), "file:" + path);
}

}  // namespace qlmc
