#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qlmc/catalog.hpp"
#include "qlmc/ideal.hpp"
#include "qlmc/model.hpp"
#include "qlmc/modelspec.hpp"
#include "qlmc/parser.hpp"
#include "qlmc/report.hpp"
#include "qlmc/suite.hpp"

namespace {

using namespace qlmc;

constexpr int kUsageError = 64;

struct Options {
  std::string model;
  std::vector<std::string> inline_props;
  std::string props_source;  // tier name or .qlp path
  std::uint64_t budget = 0;  // 0: per-command default
  std::int64_t seed = -1;    // required for samplable models
  std::string ideal_elems;
  bool json = false;
  unsigned jobs = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<NamedProp> resolve_props(const Options& opt) {
  std::vector<NamedProp> out;
  if (!opt.props_source.empty()) {
    if (opt.props_source == "axioms" || opt.props_source == "derived" ||
        opt.props_source == "all") {
      for (const auto& entry : catalog()) {
        if (!entry.prop) continue;  // lattice lemmas only run under `suite`
        if (opt.props_source == "axioms" && entry.tier != Tier::Axiom) continue;
        if (opt.props_source == "derived" && entry.tier != Tier::Derived) continue;
        out.push_back(NamedProp{entry.name, *entry.prop});
      }
    } else if (opt.props_source == "lattice") {
      throw UsageError("the lattice tier mentions meet/join; run it via `suite`");
    } else {
      for (auto& np : parse_qlp_file(opt.props_source)) out.push_back(std::move(np));
    }
  }
  for (const auto& text : opt.inline_props) {
    Prop p = parse_prop(text);
    out.push_back(NamedProp{print_prop(p), std::move(p)});
  }
  if (out.empty()) throw UsageError("no propositions given; use --prop or --props");
  return out;
}

ModelHandle resolve_model(const Options& opt) {
  if (opt.model.empty()) throw UsageError("--model is required");
  return parse_model_spec(opt.model);
}

void emit(const SuiteReport& rep, bool json) {
  if (json)
    std::cout << to_json(rep);
  else
    std::cout << to_text(rep);
  std::cerr << "# " << rep.model_id << ": " << rep.entries.size() << " propositions\n";
}

int exit_code(const SuiteReport& rep) {
  if (rep.any(Status::Falsified)) return 1;
  if (rep.any(Status::Undecided)) return 2;
  return 0;
}

int cmd_check(const Options& opt) {
  const ModelHandle handle = resolve_model(opt);
  if (!handle.is_finite())
    throw UsageError("`check` needs a finite model; use `falsify` for hilbert:N");
  const std::vector<NamedProp> props = resolve_props(opt);
  const ValidOptions vopt{opt.budget == 0 ? 100'000'000 : opt.budget, opt.jobs};

  SuiteReport rep;
  rep.model_id = handle.spec;
  for (const auto& np : props)
    rep.entries.push_back(make_entry(np.name, *handle.finite,
                                     valid_in_model(np.prop, *handle.finite, vopt)));
  emit(rep, opt.json);
  return exit_code(rep);
}

int cmd_falsify(const Options& opt) {
  const ModelHandle handle = resolve_model(opt);
  if (handle.is_finite())
    throw UsageError("`falsify` samples a hilbert:N model; use `check` for finite models");
  if (opt.seed < 0) throw UsageError("a nonnegative --seed is required for samplable models");
  const std::vector<NamedProp> props = resolve_props(opt);
  const std::uint64_t budget = opt.budget == 0 ? 10'000 : opt.budget;

  SuiteReport rep;
  rep.model_id = handle.spec;
  for (const auto& np : props)
    rep.entries.push_back(
        make_entry(np.name, *handle.hilbert,
                   falsify(np.prop, *handle.hilbert, budget, static_cast<std::uint64_t>(opt.seed))));
  emit(rep, opt.json);
  return rep.any(Status::Falsified) ? 1 : 0;
}

int cmd_suite(const Options& opt) {
  const ModelHandle handle = resolve_model(opt);
  SuiteOptions sopt;
  if (opt.budget != 0) {
    sopt.finite_budget = opt.budget;
    sopt.sample_budget = opt.budget;
  }
  sopt.jobs = opt.jobs;

  SuiteReport rep;
  if (handle.is_finite()) {
    rep = run_suite(*handle.finite, handle.lattice ? &*handle.lattice : nullptr, sopt);
  } else {
    if (opt.seed < 0) throw UsageError("a nonnegative --seed is required for samplable models");
    sopt.seed = static_cast<std::uint64_t>(opt.seed);
    rep = run_suite(*handle.hilbert, sopt);
  }
  rep.model_id = handle.spec;

  if (opt.json) {
    std::cout << to_json(rep);
  } else {
    std::cout << to_text(rep);
    for (const Tier tier : {Tier::Axiom, Tier::Derived, Tier::LatticeLemma}) {
      std::size_t total = 0, good = 0, skipped = 0;
      for (const auto& entry : catalog()) {
        if (entry.tier != tier) continue;
        for (const auto& e : rep.entries)
          if (e.name == entry.name) {
            ++total;
            if (handle.is_finite() ? e.status == Status::Valid
                                   : e.status != Status::Falsified)
              ++good;
            if (e.status == Status::Skipped) ++skipped;
          }
      }
      if (total == 0) continue;
      if (skipped == total)
        std::cout << tier_name(tier) << ": skipped\n";
      else
        std::cout << tier_name(tier) << ": " << good << "/" << total
                  << (handle.is_finite() ? " valid\n" : " not falsified\n");
    }
  }
  std::cerr << "# elapsed " << rep.elapsed_seconds << "s\n";
  return exit_code(rep);
}

int cmd_structural(const Options& opt) {
  const ModelHandle handle = resolve_model(opt);
  if (!handle.is_finite()) throw UsageError("`structural` needs a finite model");
  const std::vector<StructuralCheck> checks = run_structural(*handle.finite);
  bool all_ok = true;
  if (opt.json) {
    nlohmann::ordered_json doc;
    doc["model"] = handle.spec;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
      nlohmann::ordered_json e;
      e["name"] = c.name;
      e["ok"] = c.ok;
      if (!c.ok) e["witness"] = c.witness;
      doc["checks"].push_back(std::move(e));
      all_ok = all_ok && c.ok;
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& c : checks) {
      std::cout << c.name << '\t' << (c.ok ? "ok" : "violated");
      if (!c.ok) std::cout << '\t' << c.witness;
      std::cout << '\n';
      all_ok = all_ok && c.ok;
    }
  }
  return all_ok ? 0 : 1;
}

int cmd_classify(const Options& opt) {
  const ModelHandle handle = resolve_model(opt);
  if (!handle.is_finite()) throw UsageError("`classify` needs a finite model");
  const ClassificationFlags f = classify(*handle.finite);

  const auto row = [](const char* name, bool flag, const std::string& witness) {
    return std::tuple<const char*, bool, const std::string&>(name, flag, witness);
  };
  const auto rows = {row("commutative", f.commutative, f.commutative_witness),
                     row("associative", f.associative, f.associative_witness),
                     row("monotone", f.monotone, f.monotone_witness),
                     row("boolean", f.boolean_algebra, f.boolean_witness)};
  if (opt.json) {
    nlohmann::ordered_json doc;
    doc["model"] = handle.spec;
    for (const auto& [name, flag, witness] : rows) {
      nlohmann::ordered_json e;
      e["value"] = flag;
      if (!flag) e["witness"] = witness;
      doc[name] = std::move(e);
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& [name, flag, witness] : rows) {
      std::cout << name << '\t' << (flag ? "true" : "false");
      if (!flag) std::cout << "\twitness: " << witness;
      std::cout << '\n';
    }
  }
  return 0;
}

ElemSet parse_ideal_elems(const FiniteModel& m, const std::string& text) {
  ElemSet out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string name = text.substr(start, end - start);
    if (!name.empty()) {
      if (const auto idx = m.index_of(name)) {
        out.push_back(*idx);
      } else {
        try {
          const std::size_t idx2 = std::stoul(name);
          if (idx2 >= m.size()) throw std::out_of_range("index");
          out.push_back(idx2);
        } catch (...) {
          throw UsageError("unknown element '" + name + "' in --ideal");
        }
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int cmd_quotient(const Options& opt) {
  const ModelHandle handle = resolve_model(opt);
  if (!handle.is_finite()) throw UsageError("`quotient` needs a finite model");
  if (opt.ideal_elems.empty()) throw UsageError("--ideal is required");
  const FiniteModel& m = *handle.finite;
  const ElemSet members = parse_ideal_elems(m, opt.ideal_elems);

  if (const auto v = is_ideal(m, members)) {
    if (opt.json) {
      nlohmann::ordered_json doc;
      doc["model"] = handle.spec;
      doc["ideal"] = false;
      doc["condition"] = v->condition;
      doc["witness"] = v->witness;
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "not an ideal: condition " << v->condition << " fails at " << v->witness
                << "\n";
    }
    return 1;
  }

  const Quotient q = quotient(m, members);
  const ElemSet ker = kernel(q.projection);
  const bool kernel_matches = ker == members;

  if (opt.json) {
    nlohmann::ordered_json doc;
    doc["model"] = handle.spec;
    doc["ideal"] = true;
    doc["classes"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < q.classes.size(); ++i) {
      nlohmann::ordered_json cls = nlohmann::ordered_json::array();
      for (const std::size_t e : q.classes[i]) cls.push_back(m.names[e]);
      doc["classes"].push_back(std::move(cls));
    }
    doc["quotient_size"] = q.model.size();
    doc["homomorphism"] = true;  // asserted by construction
    doc["kernel_is_ideal"] = kernel_matches;
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (std::size_t a = 0; a < q.model.size(); ++a) {
      nlohmann::ordered_json line = nlohmann::ordered_json::array();
      for (std::size_t b = 0; b < q.model.size(); ++b)
        line.push_back(q.model.names[q.model.star(a, b)]);
      table.push_back(std::move(line));
    }
    doc["star"] = std::move(table);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "ideal\tok\n";
    std::cout << "classes\t" << q.model.size() << "\n";
    for (std::size_t i = 0; i < q.classes.size(); ++i)
      std::cout << "  " << q.model.names[i] << (i == q.model.zero() ? "\t= 0" : "")
                << (i == q.model.one() ? "\t= 1" : "") << "\n";
    std::cout << "projection\thomomorphism ok, kernel "
              << (kernel_matches ? "= ideal" : "DIFFERS") << "\n";
    std::cout << "star table:\n";
    for (std::size_t a = 0; a < q.model.size(); ++a) {
      std::cout << "  ";
      for (std::size_t b = 0; b < q.model.size(); ++b)
        std::cout << q.model.names[q.model.star(a, b)] << (b + 1 < q.model.size() ? " " : "");
      std::cout << "\n";
    }
  }
  return kernel_matches ? 0 : 1;
}

int cmd_ideals(const Options& opt) {
  const ModelHandle handle = resolve_model(opt);
  if (!handle.is_finite()) throw UsageError("`ideals` needs a finite model");
  const FiniteModel& m = *handle.finite;
  const std::vector<ElemSet> ideals = enumerate_ideals(m);
  if (opt.json) {
    nlohmann::ordered_json doc;
    doc["model"] = handle.spec;
    doc["ideals"] = nlohmann::ordered_json::array();
    for (const auto& I : ideals) {
      nlohmann::ordered_json names = nlohmann::ordered_json::array();
      for (const std::size_t e : I) names.push_back(m.names[e]);
      doc["ideals"].push_back(std::move(names));
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& I : ideals) {
      std::cout << "{";
      for (std::size_t i = 0; i < I.size(); ++i)
        std::cout << (i ? "," : "") << m.names[I[i]];
      std::cout << "}\n";
    }
    std::cout << ideals.size() << " ideals\n";
  }
  return 0;
}

int cmd_star_table(const Options& opt) {
  const ModelHandle handle = resolve_model(opt);
  if (!handle.is_finite()) throw UsageError("`star-table` needs a finite model");
  const FiniteModel& m = *handle.finite;
  if (opt.json) {
    nlohmann::ordered_json doc;
    doc["model"] = handle.spec;
    doc["elements"] = m.names;
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (std::size_t a = 0; a < m.size(); ++a) {
      nlohmann::ordered_json line = nlohmann::ordered_json::array();
      for (std::size_t b = 0; b < m.size(); ++b) line.push_back(m.names[m.star(a, b)]);
      table.push_back(std::move(line));
    }
    doc["star"] = std::move(table);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "*";
    for (const auto& name : m.names) std::cout << '\t' << name;
    std::cout << '\n';
    for (std::size_t a = 0; a < m.size(); ++a) {
      std::cout << m.names[a];
      for (std::size_t b = 0; b < m.size(); ++b) std::cout << '\t' << m.names[m.star(a, b)];
      std::cout << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"model checker for the two-connective logic of quantum measurements"};
  app.require_subcommand(1);

  Options opt;
  const auto add_common = [&opt](CLI::App* cmd, bool with_props) {
    cmd->add_option("--model", opt.model, "model spec: boolean:K, mo:K, o6, file:PATH, hilbert:N[:c=C]")
        ->required();
    if (with_props) {
      cmd->add_option("--prop", opt.inline_props, "inline proposition (repeatable)");
      cmd->add_option("--props", opt.props_source, "catalog tier (axioms|derived|all) or .qlp file");
    }
    cmd->add_option("--budget", opt.budget, "max assignments to evaluate per proposition");
    cmd->add_option("--seed", opt.seed, "random seed (required for hilbert models)");
    cmd->add_option("--jobs", opt.jobs, "worker threads for exhaustive checks");
    cmd->add_flag("--json", opt.json, "machine-readable output");
  };

  auto* check = app.add_subcommand("check", "exhaustively verify propositions on a finite model");
  add_common(check, true);
  auto* falsify = app.add_subcommand("falsify", "search for counterexamples by seeded sampling");
  add_common(falsify, true);
  auto* suite = app.add_subcommand("suite", "run the built-in property catalog");
  add_common(suite, false);
  auto* structural = app.add_subcommand("structural", "order, glb/lub and orthomodularity checks");
  add_common(structural, false);
  auto* classify = app.add_subcommand("classify", "commutative/associative/monotone/boolean flags");
  add_common(classify, false);
  auto* quotient = app.add_subcommand("quotient", "verify an ideal and build the quotient model");
  add_common(quotient, false);
  quotient->add_option("--ideal", opt.ideal_elems, "comma-separated element names or indices");
  auto* ideals = app.add_subcommand("ideals", "list all ideals of a small model");
  add_common(ideals, false);
  auto* star_table = app.add_subcommand("star-table", "print the Cayley table of star");
  add_common(star_table, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (check->parsed()) return cmd_check(opt);
    if (falsify->parsed()) return cmd_falsify(opt);
    if (suite->parsed()) return cmd_suite(opt);
    if (structural->parsed()) return cmd_structural(opt);
    if (classify->parsed()) return cmd_classify(opt);
    if (quotient->parsed()) return cmd_quotient(opt);
    if (ideals->parsed()) return cmd_ideals(opt);
    if (star_table->parsed()) return cmd_star_table(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const LatticeError& e) {
    std::cerr << "error [" << e.invariant() << "]: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
