#pragma once

// Command dispatch for the brb tool: option and TOML ingestion, the
// decompose / inverse / diffeo / verify / coproduct commands, and JSON or text
// rendering. Kept as a header so tests can drive it in-process.

#include <CLI11.hpp>
#include <json.hpp>
#include <toml.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "brb/brb.hpp"
#include "brb/verify.hpp"

namespace brb::cli {

using nlohmann::json;

enum ExitCode : int { Ok = 0, VerifyFailed = 1, ConfigFailed = 2 };

/// A configuration problem, already prefixed with where it came from.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A configuration value together with a human-readable origin
/// (`file.toml:4:6` or `--char l1=...`).
struct Located {
  std::string key;
  std::string value;
  std::string where;
};

struct RunConfig {
  std::string command;
  std::string hopf;
  std::string hopf_where = "--hopf";
  int degree = 0;
  std::vector<Located> characters;
  std::vector<Located> values;
  std::string target = "laurent";
  std::string split = "pole";
  std::string format = "json";
  bool check_oracle = false;
  std::uint64_t seed = 7;
  std::string suite = "all";
  int order = 0;
  std::vector<Located> coefficients;
};

namespace detail {

inline std::string where_of(const std::string& file, const toml::node& node) {
  const auto& begin = node.source().begin;
  return file + ":" + std::to_string(begin.line) + ":" + std::to_string(begin.column);
}

/// Reads a scalar entry as text; integers are accepted, floats are rejected.
inline std::string scalar_text(const std::string& file, const std::string& key, const toml::node& node) {
  if (auto s = node.value<std::string>()) return *s;
  if (node.is_integer()) return std::to_string(*node.value<std::int64_t>());
  throw ConfigError(where_of(file, node) + ": '" + key + "' must be a string (exact values such as \"-1/2*e^-2\")");
}

template <class T>
T required(const std::string& file, const std::string& key, const toml::node& node) {
  auto v = node.value<T>();
  if (!v) throw ConfigError(where_of(file, node) + ": '" + key + "' has the wrong type");
  return *v;
}

inline void load_table_values(const std::string& file, const toml::table& root, const char* name,
                              std::vector<Located>& out) {
  const toml::node* node = root.get(name);
  if (!node) return;
  const toml::table* table = node->as_table();
  if (!table) throw ConfigError(where_of(file, *node) + ": [" + name + "] must be a table");
  for (const auto& [k, v] : *table) {
    const std::string key(k.str());
    out.push_back({key, scalar_text(file, std::string(name) + "." + key, v), where_of(file, v) + " [" + name + "]." + key});
  }
}

inline void load_toml(const std::string& file, RunConfig& cfg) {
  toml::table root;
  try {
    root = toml::parse_file(file);
  } catch (const toml::parse_error& e) {
    const auto& b = e.source().begin;
    throw ConfigError(file + ":" + std::to_string(b.line) + ":" + std::to_string(b.column) + ": " +
                      std::string(e.description()));
  }
  if (const auto* n = root.get("command")) cfg.command = required<std::string>(file, "command", *n);
  if (const auto* n = root.get("target")) cfg.target = required<std::string>(file, "target", *n);
  if (const auto* n = root.get("split")) cfg.split = required<std::string>(file, "split", *n);
  if (const auto* n = root.get("format")) cfg.format = required<std::string>(file, "format", *n);
  if (const auto* n = root.get("check_oracle")) cfg.check_oracle = required<bool>(file, "check_oracle", *n);
  if (const auto* n = root.get("seed")) {
    const auto s = required<std::int64_t>(file, "seed", *n);
    if (s < 0) throw ConfigError(where_of(file, *n) + ": seed must be nonnegative");
    cfg.seed = static_cast<std::uint64_t>(s);
  }
  if (const auto* n = root.get("hopf")) {
    const toml::table* h = n->as_table();
    if (!h) throw ConfigError(where_of(file, *n) + ": [hopf] must be a table");
    if (const auto* v = h->get("name")) {
      cfg.hopf = required<std::string>(file, "hopf.name", *v);
      cfg.hopf_where = where_of(file, *v) + " hopf.name";
    }
    if (const auto* v = h->get("degree")) cfg.degree = static_cast<int>(required<std::int64_t>(file, "hopf.degree", *v));
  }
  load_table_values(file, root, "character", cfg.characters);
  load_table_values(file, root, "map", cfg.values);
  if (const auto* n = root.get("diffeo")) {
    const toml::table* d = n->as_table();
    if (!d) throw ConfigError(where_of(file, *n) + ": [diffeo] must be a table");
    if (const auto* v = d->get("order")) cfg.order = static_cast<int>(required<std::int64_t>(file, "diffeo.order", *v));
    if (const auto* v = d->get("coefficients")) {
      const toml::array* list = v->as_array();
      if (!list) throw ConfigError(where_of(file, *v) + ": diffeo.coefficients must be a list of [n, \"value\"] pairs");
      for (const auto& item : *list) {
        const toml::array* pair = item.as_array();
        if (!pair || pair->size() != 2 || !(*pair)[0].is_integer())
          throw ConfigError(where_of(file, item) + ": expected [n, \"value\"]");
        const auto n_ = *(*pair)[0].value<std::int64_t>();
        cfg.coefficients.push_back({std::to_string(n_), scalar_text(file, "diffeo.coefficients", (*pair)[1]),
                                    where_of(file, (*pair)[1]) + " diffeo.coefficients"});
      }
    }
  }
  if (const auto* n = root.get("verify")) {
    const toml::table* v = n->as_table();
    if (!v) throw ConfigError(where_of(file, *n) + ": [verify] must be a table");
    if (const auto* s = v->get("suite")) cfg.suite = required<std::string>(file, "verify.suite", *s);
  }
}

/// Splits `name=value` from a repeatable option.
inline Located split_assignment(const std::string& option, const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ConfigError(option + " " + text + ": expected name=value");
  return {text.substr(0, eq), text.substr(eq + 1), option + " " + text};
}

inline AlgebraElement parse_value(const Located& item, BasisKind kind) {
  try {
    return parse_algebra_element(item.value, kind);
  } catch (const ParseError& e) {
    throw ConfigError(item.where + ": " + e.what());
  }
}

inline BasisKind target_kind(const RunConfig& cfg) {
  if (cfg.target == "laurent") return BasisKind::Laurent;
  if (cfg.target == "symbolic") return BasisKind::FreeCommutative;
  throw ConfigError("target: unknown target algebra '" + cfg.target + "' (expected laurent or symbolic)");
}

inline RotaBaxterSplit split_of(const RunConfig& cfg, BasisKind kind) {
  if (cfg.split == "pole") {
    if (kind != BasisKind::Laurent) throw ConfigError("split: the pole split needs the laurent target");
    return RotaBaxterSplit::pole_part();
  }
  if (cfg.split == "trivial") return RotaBaxterSplit::trivial_plus();
  throw ConfigError("split: unknown split '" + cfg.split + "' (expected pole or trivial)");
}

inline HopfSpecPtr spec_of(const RunConfig& cfg) {
  if (cfg.hopf.empty()) throw ConfigError("--hopf: no Hopf algebra instance given");
  if (cfg.degree < 1) throw ConfigError("--degree: truncation degree must be >= 1");
  try {
    return make_hopf_spec(cfg.hopf, cfg.degree);
  } catch (const Error& e) {
    throw ConfigError(cfg.hopf_where + ": " + e.what());
  }
}

/// The input map: a character from generator values, or an arbitrary unital
/// map from monomial values (missing entries are zero).
inline UnitalLinMap input_map(const RunConfig& cfg, const HopfSpecPtr& spec, BasisKind kind) {
  if (!cfg.characters.empty() && !cfg.values.empty())
    throw ConfigError(cfg.values.front().where + ": give either character generator values or map values, not both");
  if (cfg.characters.empty() && cfg.values.empty())
    throw ConfigError("payload: no character values given (use --char name=value or a [character] table)");
  if (!cfg.characters.empty()) {
    std::map<std::size_t, AlgebraElement> gens;
    for (const auto& item : cfg.characters) {
      std::size_t index = 0;
      try {
        index = spec->generator_index(item.key);
      } catch (const Error&) {
        // a known generator family beyond the truncation is a truncation error
        throw ConfigError(item.where + ": generator '" + item.key + "' is not among the " +
                          std::to_string(spec->generators().size()) + " generators of " + spec->name() +
                          " truncated at degree " + std::to_string(spec->truncation()));
      }
      if (gens.count(index)) throw ConfigError(item.where + ": duplicate value for " + item.key);
      gens.emplace(index, parse_value(item, kind));
    }
    return Character(spec, kind, std::move(gens)).to_map();
  }
  std::map<HopfMonomial, AlgebraElement> values;
  for (const auto& item : cfg.values) {
    HopfMonomial m;
    try {
      m = spec->parse_monomial(item.key);
    } catch (const ParseError& e) {
      throw ConfigError(item.where + ": monomial key: " + e.what());
    } catch (const Error& e) {
      throw ConfigError(item.where + ": " + e.what());
    }
    if (m.is_unit()) throw ConfigError(item.where + ": the value at 1 is fixed to 1");
    if (values.count(m)) throw ConfigError(item.where + ": duplicate value for " + spec->render(m));
    values.emplace(m, parse_value(item, kind));
  }
  return UnitalLinMap(spec, kind, std::move(values));
}

inline json hopf_json(const HopfAlgebraSpec& spec) {
  json h = {{"name", spec.name()}, {"degree", spec.truncation()}};
  if (!spec.convention().empty()) h["convention"] = spec.convention();
  return h;
}

inline std::string render_difference(const HopfAlgebraSpec& spec, const std::optional<HopfMonomial>& m) {
  return m ? spec.render(*m) : std::string();
}

inline json difference_json(const HopfAlgebraSpec& spec, const std::optional<HopfMonomial>& m) {
  return m ? json(spec.render(*m)) : json(nullptr);
}

// ---------------------------------------------------------------------------
// commands

inline int run_decompose(const RunConfig& cfg, std::ostream& out) {
  const HopfSpecPtr spec = spec_of(cfg);
  const BasisKind kind = target_kind(cfg);
  const RotaBaxterSplit split = split_of(cfg, kind);
  const UnitalLinMap phi = input_map(cfg, spec, kind);
  const BrbDecomposition d = closed_brb(phi, split);

  const bool identity = convolve(d.minus, phi) == d.plus;
  const bool plus_ok = in_sector(d.plus, split, true);
  const bool minus_ok = in_sector(d.minus, split, false);
  bool ok = identity && plus_ok && minus_ok;

  json values = json::object();
  for (const auto& m : spec->monomials())
    values[spec->render(m)] = {{"input", to_string(phi(m))}, {"plus", to_string(d.plus(m))}, {"minus", to_string(d.minus(m))}};
  json doc = {{"command", "decompose"},
              {"hopf", hopf_json(*spec)},
              {"split", split.name()},
              {"target", cfg.target},
              {"input_is_character", is_character(phi, spec->truncation())},
              {"values", values},
              {"contract", {{"minus_star_input_equals_plus", identity}, {"plus_in_A_plus", plus_ok}, {"minus_in_A_minus", minus_ok}}}};

  std::optional<HopfMonomial> plus_diff, minus_diff;
  if (cfg.check_oracle) {
    const BrbDecomposition rec = brb_recursive(phi, split);
    plus_diff = first_difference(d.plus, rec.plus);
    minus_diff = first_difference(d.minus, rec.minus);
    ok = ok && !plus_diff && !minus_diff;
    doc["verification"] = {{"oracle", "brb_recursive"},
                           {"plus_equal", !plus_diff},
                           {"minus_equal", !minus_diff},
                           {"first_difference_plus", difference_json(*spec, plus_diff)},
                           {"first_difference_minus", difference_json(*spec, minus_diff)}};
  }

  if (cfg.format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    out << "decompose " << spec->name() << " N=" << spec->truncation() << " split=" << split.name() << "\n";
    for (const auto& m : spec->monomials())
      out << "  " << spec->render(m) << ": input = " << to_string(phi(m)) << "; plus = " << to_string(d.plus(m))
          << "; minus = " << to_string(d.minus(m)) << "\n";
    out << "phi_- * phi = phi_+: " << (identity ? "yes" : "NO") << "; sectors: " << (plus_ok && minus_ok ? "ok" : "VIOLATED") << "\n";
    if (cfg.check_oracle)
      out << "oracle brb_recursive: " << (!plus_diff && !minus_diff ? "agrees" : "DIFFERS at " + render_difference(*spec, plus_diff ? plus_diff : minus_diff)) << "\n";
  }
  return ok ? Ok : VerifyFailed;
}

inline int run_inverse(const RunConfig& cfg, std::ostream& out) {
  const HopfSpecPtr spec = spec_of(cfg);
  const BasisKind kind = target_kind(cfg);
  const UnitalLinMap phi = input_map(cfg, spec, kind);
  const UnitalLinMap inv = closed_inverse(phi);
  const bool identity = convolve(inv, phi) == convolution_unit(spec, kind);
  bool ok = identity;

  json values = json::object();
  for (const auto& m : spec->monomials()) values[spec->render(m)] = {{"input", to_string(phi(m))}, {"inverse", to_string(inv(m))}};
  json doc = {{"command", "inverse"},
              {"hopf", hopf_json(*spec)},
              {"target", cfg.target},
              {"values", values},
              {"contract", {{"inverse_star_input_is_unit", identity}}}};

  std::optional<HopfMonomial> rec_diff, series_diff;
  if (cfg.check_oracle) {
    rec_diff = first_difference(inv, inverse_recursive(phi));
    series_diff = first_difference(inv, inverse_series(phi));
    ok = ok && !rec_diff && !series_diff;
    doc["verification"] = {{"oracle", "inverse_recursive, inverse_series"},
                           {"recursive_equal", !rec_diff},
                           {"series_equal", !series_diff},
                           {"first_difference_recursive", difference_json(*spec, rec_diff)},
                           {"first_difference_series", difference_json(*spec, series_diff)}};
  }

  if (cfg.format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    out << "inverse " << spec->name() << " N=" << spec->truncation() << "\n";
    for (const auto& m : spec->monomials())
      out << "  " << spec->render(m) << ": input = " << to_string(phi(m)) << "; inverse = " << to_string(inv(m)) << "\n";
    out << "inverse * phi = e: " << (identity ? "yes" : "NO") << "\n";
    if (cfg.check_oracle)
      out << "oracles: " << (!rec_diff && !series_diff ? "agree" : "DIFFER at " + render_difference(*spec, rec_diff ? rec_diff : series_diff)) << "\n";
  }
  return ok ? Ok : VerifyFailed;
}

inline FormalDiffeo diffeo_of(const RunConfig& cfg) {
  if (cfg.order < 1) throw ConfigError("--order: diffeomorphism order must be >= 1");
  if (cfg.target != "laurent") throw ConfigError("target: diffeomorphism coefficients are Laurent polynomials");
  std::map<int, AlgebraElement> coefficients;
  for (const auto& item : cfg.coefficients) {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(item.key, &used);
      if (used != item.key.size()) throw std::invalid_argument("trailing text");
    } catch (const std::exception&) {
      throw ConfigError(item.where + ": coefficient index '" + item.key + "' is not an integer");
    }
    if (n < 2 || n > cfg.order)
      throw ConfigError(item.where + ": coefficient index " + std::to_string(n) + " outside [2, " + std::to_string(cfg.order) + "]");
    if (coefficients.count(n)) throw ConfigError(item.where + ": duplicate coefficient x^" + std::to_string(n));
    coefficients.emplace(n, parse_value(item, BasisKind::Laurent));
  }
  return FormalDiffeo(cfg.order, std::move(coefficients));
}

inline json coefficients_json(const FormalDiffeo& f) {
  json list = json::array();
  for (int n = 2; n <= f.order(); ++n) list.push_back({{"n", n}, {"value", to_string(f.coefficient(n))}});
  return list;
}

inline int run_diffeo(const RunConfig& cfg, std::ostream& out) {
  const FormalDiffeo f = diffeo_of(cfg);
  const RotaBaxterSplit split = split_of(cfg, BasisKind::Laurent);
  const DiffeoFactorization d = birkhoff_factorize(f, split, BrbRoute::Closed);
  const FactorizationReport report = verify_factorization(f, d, split);
  bool ok = report.ok();
  const HopfSpecPtr spec = faa_di_bruno_spec(std::max(1, f.order() - 1));

  json doc = {{"command", "diffeo"},
              {"order", f.order()},
              {"split", split.name()},
              {"convention", spec->convention()},
              {"input", coefficients_json(f)},
              {"plus", coefficients_json(d.plus)},
              {"minus", coefficients_json(d.minus)},
              {"verification",
               {{"composed_equals_plus", report.composed_equals_plus},
                {"minus_polar", report.minus_polar},
                {"plus_pole_free", report.plus_pole_free}}}};
  bool routes_agree = true;
  if (cfg.check_oracle) {
    const DiffeoFactorization rec = birkhoff_factorize(f, split, BrbRoute::Recursive);
    routes_agree = rec.plus == d.plus && rec.minus == d.minus;
    ok = ok && routes_agree;
    doc["verification"]["recursive_route_equal"] = routes_agree;
  }

  if (cfg.format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    out << "f   = " << to_string(f) << "\n";
    out << "f_+ = " << to_string(d.plus) << "\n";
    out << "f_- = " << to_string(d.minus) << "\n";
    out << "f_- o f = f_+: " << (report.composed_equals_plus ? "yes" : "NO") << "; f_- polar: " << (report.minus_polar ? "yes" : "NO")
        << "; f_+ pole-free: " << (report.plus_pole_free ? "yes" : "NO") << "\n";
    if (cfg.check_oracle) out << "recursive route: " << (routes_agree ? "agrees" : "DIFFERS") << "\n";
  }
  return ok ? Ok : VerifyFailed;
}

inline int run_verify(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::string> names;
  if (cfg.suite == "all") {
    names = verify::suite_names();
  } else {
    const auto& known = verify::suite_names();
    if (std::find(known.begin(), known.end(), cfg.suite) == known.end())
      throw ConfigError("--suite: unknown suite '" + cfg.suite + "' (expected all or one of stuffle-axioms, hopf-axioms, "
                        "rb-identity, universal-maps, brb-equivalence, diffeo)");
    names.push_back(cfg.suite);
  }
  bool ok = true;
  json suites = json::array();
  std::ostringstream text;
  for (const auto& name : names) {
    const verify::SuiteResult r = verify::run_suite(name, cfg.seed);
    ok = ok && r.passed();
    json checks = json::array();
    text << (r.passed() ? "PASS " : "FAIL ") << name << "\n";
    for (const auto& c : r.checks) {
      json entry = {{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
      if (!c.passed) entry["counterexample"] = c.counterexample;
      checks.push_back(entry);
      text << "  " << (c.passed ? "ok   " : "FAIL ") << c.name << " (" << c.cases << " cases)";
      if (!c.passed) text << ": " << c.counterexample;
      text << "\n";
    }
    suites.push_back({{"name", name}, {"passed", r.passed()}, {"checks", checks}});
  }
  if (cfg.format == "json")
    out << json{{"command", "verify"}, {"seed", cfg.seed}, {"passed", ok}, {"suites", suites}}.dump(2) << "\n";
  else
    out << text.str();
  return ok ? Ok : VerifyFailed;
}

/// Generator coproduct tables, for inspection.
inline int run_coproduct(const RunConfig& cfg, std::ostream& out) {
  const HopfSpecPtr spec = spec_of(cfg);
  json gens = json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i < spec->generators().size(); ++i) {
    json terms = json::array();
    text << "Delta'(" << spec->generators()[i].name << ") =";
    bool any = false;
    for (const auto& t : spec->reduced_table()[i]) {
      terms.push_back({{"left", spec->render(t.left)}, {"right", spec->render(t.right)}, {"coefficient", to_string(t.coefficient)}});
      text << (any ? " + " : " ") << to_string(t.coefficient) << " " << spec->render(t.left) << " (x) " << spec->render(t.right);
      any = true;
    }
    if (!any) text << " 0";
    text << "\n";
    gens.push_back({{"name", spec->generators()[i].name}, {"degree", spec->generators()[i].degree}, {"reduced_coproduct", terms}});
  }
  if (cfg.format == "json")
    out << json{{"command", "coproduct"}, {"hopf", hopf_json(*spec)}, {"generators", gens}}.dump(2) << "\n";
  else
    out << text.str();
  return Ok;
}

inline void check_payload(const RunConfig& cfg) {
  const bool map_payload = !cfg.characters.empty() || !cfg.values.empty();
  const bool diffeo_payload = !cfg.coefficients.empty() || cfg.order != 0;
  if (cfg.format != "json" && cfg.format != "text")
    throw ConfigError("--format: unknown format '" + cfg.format + "' (expected json or text)");
  if ((cfg.command == "decompose" || cfg.command == "inverse") && diffeo_payload)
    throw ConfigError(cfg.command + ": diffeomorphism payload given to a character command");
  if (cfg.command == "diffeo" && map_payload)
    throw ConfigError("diffeo: character payload given to the diffeomorphism command");
}

}  // namespace detail

/// Runs the tool on argv-style arguments (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Birkhoff-Rota-Baxter decompositions through universal closed formulas", "brb"};
  app.require_subcommand(0, 1);

  RunConfig cfg;
  std::string config_file;
  std::vector<std::string> chars, values, coefs;
  std::optional<std::string> hopf, split, format, target, suite;
  std::optional<int> degree, order;
  std::optional<std::uint64_t> seed;
  bool check_oracle = false;

  app.add_option("--config", config_file, "TOML run configuration")->check(CLI::ExistingFile);
  app.add_option("--hopf", hopf, "Hopf algebra instance: ladder or faadibruno");
  app.add_option("--degree", degree, "truncation degree N");
  app.add_option("--char", chars, "generator value, e.g. l1=e^-1 (repeatable)");
  app.add_option("--value", values, "map value on a monomial, e.g. l1^2=1+e (repeatable)");
  app.add_option("--target", target, "target algebra: laurent or symbolic");
  app.add_option("--split", split, "Rota-Baxter split: pole or trivial");
  app.add_option("--format", format, "output format: json or text");
  app.add_flag("--check-oracle", check_oracle, "also run the recursive oracle and compare");
  app.add_option("--seed", seed, "PRNG seed for verify");
  app.add_option("--suite", suite, "verify suite name or all");
  app.add_option("--order", order, "diffeomorphism order");
  app.add_option("--coef", coefs, "diffeomorphism coefficient, e.g. 2=e^-1 (repeatable)");

  std::vector<CLI::App*> commands;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"decompose", "BRB decomposition phi_- * phi = phi_+ of a character or unital map"},
           {"inverse", "convolution inverse of a character or unital map"},
           {"diffeo", "Birkhoff factorization f_- o f = f_+ of a formal diffeomorphism"},
           {"verify", "run named property suites"},
           {"coproduct", "dump the generator coproduct table of a Hopf algebra"}}) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    commands.push_back(sub);
  }

  std::vector<std::string> argv_storage{"brb"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return ConfigFailed;
  }

  try {
    if (!config_file.empty()) detail::load_toml(config_file, cfg);
    std::string command;
    for (auto* sub : commands)
      if (sub->parsed()) command = sub->get_name();
    if (!command.empty()) {
      if (!cfg.command.empty() && cfg.command != command)
        throw ConfigError(config_file + ": command '" + cfg.command + "' does not match '" + command + "'");
      cfg.command = command;
    }
    if (cfg.command.empty()) throw ConfigError("no command given (decompose, inverse, diffeo, verify, coproduct)");
    if (hopf) {
      cfg.hopf = *hopf;
      cfg.hopf_where = "--hopf";
    }
    if (degree) cfg.degree = *degree;
    if (target) cfg.target = *target;
    if (split) cfg.split = *split;
    if (format) cfg.format = *format;
    if (check_oracle) cfg.check_oracle = true;
    if (seed) cfg.seed = *seed;
    if (suite) cfg.suite = *suite;
    if (order) cfg.order = *order;
    for (const auto& c : chars) cfg.characters.push_back(detail::split_assignment("--char", c));
    for (const auto& v : values) cfg.values.push_back(detail::split_assignment("--value", v));
    for (const auto& c : coefs) cfg.coefficients.push_back(detail::split_assignment("--coef", c));
    detail::check_payload(cfg);

    if (cfg.command == "decompose") return detail::run_decompose(cfg, out);
    if (cfg.command == "inverse") return detail::run_inverse(cfg, out);
    if (cfg.command == "diffeo") return detail::run_diffeo(cfg, out);
    if (cfg.command == "verify") return detail::run_verify(cfg, out);
    if (cfg.command == "coproduct") return detail::run_coproduct(cfg, out);
    throw ConfigError("unknown command '" + cfg.command + "'");
  } catch (const ConfigError& e) {
    err << "brb: config error: " << e.what() << "\n";
    return ConfigFailed;
  } catch (const Error& e) {
    err << "brb: error: " << e.what() << "\n";
    return ConfigFailed;
  }
}

}  // namespace brb::cli
