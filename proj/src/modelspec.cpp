#include "qlmc/modelspec.hpp"

#include <stdexcept>

namespace qlmc {

namespace {

unsigned parse_count(const std::string& text, const std::string& what) {
  if (text.empty()) throw std::invalid_argument("model spec: missing " + what);
  unsigned value = 0;
  for (const char c : text) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("model spec: " + what + " must be a number, got '" + text + "'");
    value = value * 10 + static_cast<unsigned>(c - '0');
    if (value > 1'000'000) throw std::invalid_argument("model spec: " + what + " too large");
  }
  return value;
}

ModelHandle from_lattice(const std::string& spec, FiniteOrtholattice lattice) {
  ModelHandle h;
  h.spec = spec;
  h.finite = as_model(lattice);
  h.lattice = std::move(lattice);
  return h;
}

}  // namespace

ModelHandle parse_model_spec(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string tail = colon == std::string::npos ? "" : spec.substr(colon + 1);

  if (head == "boolean") return from_lattice(spec, build(BooleanSpec{parse_count(tail, "atom count")}));
  if (head == "mo") return from_lattice(spec, build(MOSpec{parse_count(tail, "pair count")}));
  if (head == "o6") {
    if (!tail.empty()) throw std::invalid_argument("model spec: o6 takes no parameter");
    return from_lattice(spec, build(O6Spec{}));
  }
  if (head == "file") {
    if (tail.empty()) throw std::invalid_argument("model spec: file: needs a path");
    return from_lattice(spec, lattice_from_json_file(tail));
  }
  if (head == "hilbert") {
    const std::size_t colon2 = tail.find(':');
    const std::string dim_text = tail.substr(0, colon2);
    long long bound = 5;
    if (colon2 != std::string::npos) {
      const std::string opt = tail.substr(colon2 + 1);
      if (opt.rfind("c=", 0) != 0)
        throw std::invalid_argument("model spec: expected c=BOUND after hilbert:N:");
      bound = static_cast<long long>(parse_count(opt.substr(2), "coordinate bound"));
    }
    const unsigned dim = parse_count(dim_text, "dimension");
    if (dim < 1 || dim > 16)
      throw std::invalid_argument("model spec: hilbert dimension must be in 1..16");
    ModelHandle h;
    h.spec = spec;
    h.hilbert = make_hilbert(dim, bound);
    return h;
  }
  throw std::invalid_argument("model spec: unknown model '" + spec +
                              "' (expected boolean:K, mo:K, o6, file:PATH or hilbert:N[:c=C])");
}

}  // namespace qlmc
