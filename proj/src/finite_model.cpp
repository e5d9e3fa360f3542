#include "qlmc/finite_model.hpp"

#include <stdexcept>

namespace qlmc {

std::optional<std::size_t> FiniteModel::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

void FiniteModel::validate() const {
  const std::size_t n = names.size();
  if (n == 0) throw std::invalid_argument("model: empty carrier");
  if (neg_table.size() != n) throw std::invalid_argument("model: neg table size mismatch");
  if (star_table.size() != n * n) throw std::invalid_argument("model: star table size mismatch");
  if (zero_idx >= n || one_idx >= n) throw std::invalid_argument("model: constant out of range");
  for (const std::size_t v : neg_table)
    if (v >= n) throw std::invalid_argument("model: neg entry out of range");
  for (const std::size_t v : star_table)
    if (v >= n) throw std::invalid_argument("model: star entry out of range");
}

std::vector<std::size_t> generated_subalgebra(const FiniteModel& m,
                                              const std::vector<std::size_t>& seeds) {
  const std::size_t n = m.size();
  std::vector<char> in(n, 0);
  in[m.zero()] = 1;
  in[m.one()] = 1;
  for (const std::size_t s : seeds) {
    if (s >= n) throw std::invalid_argument("generated_subalgebra: element out of range");
    in[s] = 1;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t a = 0; a < n; ++a) {
      if (!in[a]) continue;
      if (!in[m.neg(a)]) {
        in[m.neg(a)] = 1;
        grew = true;
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (!in[b]) continue;
        if (!in[m.star(a, b)]) {
          in[m.star(a, b)] = 1;
          grew = true;
        }
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

FiniteModel submodel(const FiniteModel& m, const std::vector<std::size_t>& closed) {
  const std::size_t n = m.size();
  std::vector<std::size_t> to_sub(n, n);
  for (std::size_t i = 0; i < closed.size(); ++i) {
    if (closed[i] >= n) throw std::invalid_argument("submodel: element out of range");
    to_sub[closed[i]] = i;
  }
  const auto map = [&](std::size_t e) {
    if (to_sub[e] == n) throw std::invalid_argument("submodel: element set not closed");
    return to_sub[e];
  };

  FiniteModel sub;
  sub.id = m.id + "[sub]";
  sub.names.reserve(closed.size());
  for (const std::size_t e : closed) sub.names.push_back(m.names[e]);
  sub.zero_idx = map(m.zero());
  sub.one_idx = map(m.one());
  sub.neg_table.resize(closed.size());
  sub.star_table.resize(closed.size() * closed.size());
  for (std::size_t i = 0; i < closed.size(); ++i) {
    sub.neg_table[i] = map(m.neg(closed[i]));
    for (std::size_t j = 0; j < closed.size(); ++j)
      sub.star_table[i * closed.size() + j] = map(m.star(closed[i], closed[j]));
  }
  sub.validate();
  return sub;
}

}  // namespace qlmc
