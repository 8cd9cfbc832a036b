#include "qkzlab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "qkzlab/classical.hpp"
#include "qkzlab/fusion.hpp"
#include "qkzlab/qkz.hpp"
#include "qkzlab/random.hpp"
#include "qkzlab/rmatrix.hpp"

namespace qkzlab::cli {

namespace {

using nlohmann::json;

// A pole hit while sampling random parameters; the sample is redrawn.
constexpr int kMaxRedraws = 10000;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, sep);) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

/// Command parameters: explicit flags win over the config file. System keys
/// are looked up in config["system"] first, then at the top level.
class Params {
 public:
  json config = json::object();
  std::map<std::string, std::string> flags;
  std::set<std::string> switches;

  const json* lookup(const std::string& key) const {
    if (auto sys = config.find("system"); sys != config.end() && sys->is_object()) {
      if (auto it = sys->find(key); it != sys->end()) return &*it;
    }
    if (auto it = config.find(key); it != config.end()) return &*it;
    return nullptr;
  }

  bool has(const std::string& key) const { return flags.count(key) > 0 || lookup(key) != nullptr; }

  std::string text(const std::string& key, const std::string& fallback) const {
    if (auto it = flags.find(key); it != flags.end()) return it->second;
    if (const json* j = lookup(key)) {
      if (j->is_string()) return j->get<std::string>();
      if (j->is_number_integer()) return j->dump();
      throw ConfigError("'" + key + "' must be a string or an integer");
    }
    return fallback;
  }

  Rat rat(const std::string& key, const Rat& fallback) const {
    return has(key) ? Rat::parse(text(key, "")) : fallback;
  }

  long integer(const std::string& key, long fallback) const {
    if (!has(key)) return fallback;
    const std::string t = text(key, "");
    try {
      std::size_t used = 0;
      const long v = std::stol(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      return v;
    } catch (const std::logic_error&) {
      throw ConfigError("'" + key + "' must be an integer, got '" + t + "'");
    }
  }

  bool on(const std::string& key) const {
    if (switches.count(key)) return true;
    const json* j = lookup(key);
    return j != nullptr && j->is_boolean() && j->get<bool>();
  }

  std::vector<Rat> rats(const std::string& key) const {
    std::vector<Rat> out;
    if (auto it = flags.find(key); it != flags.end()) {
      for (const auto& s : split(it->second, ',')) out.push_back(Rat::parse(s));
      return out;
    }
    const json* j = lookup(key);
    if (j == nullptr) return out;
    if (!j->is_array()) throw ConfigError("'" + key + "' must be a list");
    for (const auto& x : *j) {
      if (x.is_string()) {
        out.push_back(Rat::parse(x.get<std::string>()));
      } else if (x.is_number_integer()) {
        out.push_back(Rat(x.get<long>()));
      } else {
        throw ConfigError("'" + key + "' entries must be rational strings");
      }
    }
    return out;
  }
};

RMode mode_from(const Params& p, bool default_normalized) {
  int order = static_cast<int>(p.integer("order", 4));
  std::string name;
  if (auto it = p.flags.find("mode"); it != p.flags.end()) {
    name = it->second;
  } else if (const json* j = p.lookup("mode")) {
    if (j->is_string()) {
      name = j->get<std::string>();
    } else if (j->is_object() && j->contains("normalized")) {
      name = "normalized";
      const json& n = j->at("normalized");
      if (n.is_object() && n.contains("order")) {
        if (!n.at("order").is_number_integer()) throw ConfigError("mode order must be an integer");
        order = n.at("order").get<int>();
      }
    } else {
      throw ConfigError("mode must be \"bare\" or {\"normalized\": {\"order\": N}}");
    }
  } else {
    name = default_normalized || p.flags.count("order") ? "normalized" : "bare";
  }
  if (name == "bare") return RMode::bare();
  if (name == "normalized") return RMode::normalized(order);
  throw ConfigError("unknown mode '" + name + "'");
}

json report_json(const CheckReport& r) { return json::parse(to_json(r)); }

std::string indexed(const std::string& base, std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%03zu", i);
  return base + "[" + buf + "]";
}

/// Collects reports under sorted keys; the document passes iff all do.
struct Doc {
  json checks = json::object();
  json extra = json::object();
  bool pass = true;

  void add(const std::string& key, const CheckReport& r) {
    checks[key] = report_json(r);
    pass = pass && r.pass;
  }
};

/// Calls draw() until it returns without a pole; gives up after kMaxRedraws.
template <class F>
void redraw_on_pole(F&& draw) {
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    try {
      draw();
      return;
    } catch (const PoleEncountered&) {
    } catch (const SingularOperator&) {
    }
  }
  throw Error("no admissible random sample after " + std::to_string(kMaxRedraws) + " draws");
}

std::vector<Rat> distinct_rationals(Lcg& rng, std::size_t n) {
  std::vector<Rat> out;
  while (out.size() < n) {
    const Rat r = rng.rational();
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  return out;
}

long trials_from(const Params& p, long fallback) {
  const long t = p.integer("trials", fallback);
  if (t < 1) throw ConfigError("trials must be >= 1");
  return t;
}

// ---------------------------------------------------------------- rmatrix commands

Doc cmd_ybe(const Params& p, std::uint64_t seed) {
  const RMode mode = mode_from(p, false);
  Doc doc;
  if (p.has("u") || p.has("v")) {
    doc.add("ybe", ybe_check(mode, p.rat("u", Rat(0)), p.rat("v", Rat(0)), p.rat("hbar", Rat(1))));
    return doc;
  }
  Lcg rng(seed);
  const long trials = trials_from(p, mode.is_bare() ? 200 : 20);
  for (long i = 0; i < trials; ++i) {
    redraw_on_pole([&] {
      const Rat u = rng.rational(), v = rng.rational();
      const Rat h = p.has("hbar") ? p.rat("hbar", Rat(1)) : rng.nonzero_rational();
      doc.add(indexed("ybe", static_cast<std::size_t>(i)), ybe_check(mode, u, v, h));
    });
  }
  return doc;
}

Doc cmd_unitarity(const Params& p, std::uint64_t seed) {
  const RMode mode = mode_from(p, false);
  Doc doc;
  if (p.has("z")) {
    doc.add("unitarity", unitarity_check(mode, p.rat("z", Rat(0)), p.rat("hbar", Rat(1))));
    return doc;
  }
  Lcg rng(seed);
  const long trials = trials_from(p, mode.is_bare() ? 200 : 20);
  for (long i = 0; i < trials; ++i) {
    redraw_on_pole([&] {
      const Rat z = rng.rational();
      const Rat h = p.has("hbar") ? p.rat("hbar", Rat(1)) : rng.nonzero_rational();
      doc.add(indexed("unitarity", static_cast<std::size_t>(i)), unitarity_check(mode, z, h));
    });
  }
  return doc;
}

Doc cmd_crossing(const Params& p, std::uint64_t seed) {
  const RMode mode = mode_from(p, true);
  Doc doc;
  auto one = [&](const Rat& z, const Rat& h) {
    return mode.is_bare() ? crossing_check_bare(z, h) : crossing_check(mode.order(), z);
  };
  if (p.has("z")) {
    doc.add("crossing", one(p.rat("z", Rat(0)), p.rat("hbar", Rat(1))));
    return doc;
  }
  Lcg rng(seed);
  const long trials = trials_from(p, 10);
  for (long i = 0; i < trials; ++i) {
    redraw_on_pole([&] {
      const Rat z = rng.nonzero_rational();
      const Rat h = p.has("hbar") ? p.rat("hbar", Rat(1)) : rng.nonzero_rational();
      doc.add(indexed("crossing", static_cast<std::size_t>(i)), one(z, h));
    });
  }
  return doc;
}

Doc cmd_qdet(const Params& p, std::uint64_t) {
  const RMode mode = mode_from(p, false);
  const Rat hbar = p.rat("hbar", Rat(1));
  Doc doc;
  doc.add("qdet", qdet_check(mode, hbar));
  const auto sites = p.rats("sites");
  if (!sites.empty()) doc.add("qdet_multiplicativity", qdet_multiplicativity_check(p.rat("t", Rat(7, 2)), sites, mode, hbar));
  return doc;
}

/// PlusPlus, MinusPlus, MinusMinus or the short forms pp, mp, mm.
RllRelation relation_from(const std::string& text) {
  if (text == "pp") return RllRelation::PlusPlus;
  if (text == "mp") return RllRelation::MinusPlus;
  if (text == "mm") return RllRelation::MinusMinus;
  return parse_relation(text);
}

// ---------------------------------------------------------------- rll

Doc cmd_rll(const Params& p, std::uint64_t seed) {
  const RMode mode = mode_from(p, false);
  std::vector<RllRelation> relations;
  const std::string rel = p.text("relation", "all");
  if (rel == "all") {
    relations = {RllRelation::PlusPlus, RllRelation::MinusPlus, RllRelation::MinusMinus};
  } else {
    relations = {relation_from(rel)};
  }
  std::vector<Realization> realizations;
  const std::string real = p.text("realization", "both");
  if (real == "plain" || real == "both") realizations.push_back(Realization::Plain);
  if (real == "dual" || real == "both") realizations.push_back(Realization::Dual);
  if (realizations.empty()) throw ConfigError("realization must be plain, dual or both");
  const long n_sites = p.integer("sites", 2);
  if (n_sites < 1) throw ConfigError("sites must be >= 1");
  const long samples = trials_from(p, p.integer("samples", 5));

  Lcg rng(seed);
  Doc doc;
  for (auto r : relations) {
    for (auto re : realizations) {
      for (long i = 0; i < samples; ++i) {
        redraw_on_pole([&] {
          RllSample s;
          s.relation = r;
          s.realization = re;
          s.z = rng.rational();
          s.zp = rng.rational();
          s.sites = distinct_rationals(rng, static_cast<std::size_t>(n_sites));
          s.hbar = p.has("hbar") ? p.rat("hbar", Rat(1)) : rng.nonzero_rational();
          s.level = p.rat("level", Rat(0));
          s.misorder = p.on("misorder");
          const std::string key = "rll_" + to_string(r) + (re == Realization::Plain ? "_plain" : "_dual");
          doc.add(indexed(key, static_cast<std::size_t>(i)), rll_sample_check(s, mode));
        });
      }
    }
  }
  return doc;
}

// ---------------------------------------------------------------- qkz commands

/// The system from the parameters; random points (seeded) when none are given.
QkzSystem system_from(const Params& p, Lcg& rng, bool allow_random) {
  const RMode mode = mode_from(p, false);
  const Rat level = p.rat("level", Rat(0));
  std::optional<Rat> hbar;
  if (mode.is_bare()) hbar = p.rat("hbar", Rat(1));
  std::vector<Rat> pts = p.rats("points");
  if (pts.empty()) {
    if (!allow_random) throw ConfigError("points are required");
    const long n = p.integer("n", 3);
    if (n < 2) throw ConfigError("a qKZ system needs at least two points");
    pts = distinct_rationals(rng, static_cast<std::size_t>(n));
  } else if (p.has("n") && p.integer("n", 0) != static_cast<long>(pts.size())) {
    throw ConfigError("n does not match the number of points");
  }
  return QkzSystem(std::vector<Spectral>(pts.begin(), pts.end()), level, mode, hbar);
}

Doc flatness_all_pairs(const QkzSystem& sys) {
  Doc doc;
  for (int i = 1; i <= sys.n(); ++i) {
    for (int j = 1; j <= sys.n(); ++j) {
      if (i != j) doc.add("flatness(" + std::to_string(i) + "," + std::to_string(j) + ")", flatness_check(sys, i, j));
    }
  }
  return doc;
}

Doc cmd_flatness(const Params& p, std::uint64_t seed) {
  Lcg rng(seed);
  if (p.has("points")) {
    const QkzSystem sys = system_from(p, rng, false);
    Doc doc = flatness_all_pairs(sys);
    doc.extra["system"] = sys.describe();
    return doc;
  }
  // Random points: redraw until every operator in the check is pole-free.
  Doc doc;
  redraw_on_pole([&] {
    const QkzSystem sys = system_from(p, rng, true);
    doc = flatness_all_pairs(sys);
    doc.extra["system"] = sys.describe();
  });
  return doc;
}

LatticePath path_from(const Params& p) {
  LatticePath path;
  if (auto it = p.flags.find("path"); it != p.flags.end()) {
    for (const auto& step : split(it->second, ',')) {
      const auto parts = split(step, ':');
      if (parts.size() != 2) throw ConfigError("path steps look like i:sign, got '" + step + "'");
      try {
        path.push_back({std::stoi(parts[0]), std::stoi(parts[1])});
      } catch (const std::logic_error&) {
        throw ConfigError("bad path step '" + step + "'");
      }
    }
    return path;
  }
  const json* j = p.lookup("path");
  if (j == nullptr) return path;
  const json* steps = j->is_object() && j->contains("steps") ? &j->at("steps") : j;
  if (!steps->is_array()) throw ConfigError("path must be {\"steps\": [{\"i\": ..., \"sign\": ...}]}");
  for (const auto& s : *steps) {
    if (!s.is_object() || !s.contains("i") || !s.contains("sign") || !s.at("i").is_number_integer() ||
        !s.at("sign").is_number_integer()) {
      throw ConfigError("each path step needs integer \"i\" and \"sign\"");
    }
    path.push_back({s.at("i").get<int>(), s.at("sign").get<int>()});
  }
  return path;
}

Doc cmd_transport(const Params& p, std::uint64_t seed) {
  Lcg rng(seed);
  const QkzSystem sys = system_from(p, rng, false);
  const LatticePath path = path_from(p);
  const std::vector<Rat> v = p.rats("vector");
  Doc doc;
  json points = json::array();
  json vec = json::array();
  bool unchanged = true;
  if (sys.mode().is_bare()) {
    const auto res = transport(sys, sys.bare_source(), path, v);
    for (const auto& x : res.vector) vec.push_back(x.to_string());
    for (const auto& z : res.system.points()) points.push_back(z.at(*sys.hbar()).to_string());
    unchanged = res.vector == v;
  } else {
    std::vector<HSeries<Rat>> sv(v.begin(), v.end());
    for (auto& x : sv) x = x.truncated(sys.mode().order());
    const auto res = transport(sys, sys.normalized_source(), path, sv);
    for (const auto& x : res.vector) vec.push_back(to_string(x));
    for (const auto& z : res.system.points()) points.push_back(z.to_string());
    for (std::size_t k = 0; k < sv.size(); ++k) unchanged = unchanged && res.vector[k] == sv[k];
  }
  doc.extra["vector"] = vec;
  doc.extra["points"] = points;
  doc.extra["steps"] = std::to_string(path.size());
  doc.extra["vector_unchanged"] = unchanged;
  return doc;
}

// ---------------------------------------------------------------- classical

Doc cmd_classical(const Params& p, std::uint64_t) {
  const long cutoff = p.has("cutoff") ? p.integer("cutoff", 2) : p.integer("M", 2);
  const std::string exp = p.text("expansion", "normalized");
  if (exp != "normalized" && exp != "bare") throw ConfigError("expansion must be normalized or bare");
  const RExpansion expansion = exp == "bare" ? RExpansion::Bare : RExpansion::Normalized;
  const std::string rel = p.text("relation", "all");
  Doc doc;
  if (rel == "all") {
    const BracketTable table = expand_all(static_cast<int>(cutoff), expansion);
    doc.add("loop_algebra", compare_loop_algebra(table));
    doc.add("jacobi", jacobi_check(table));
    doc.extra["table"] = json::parse(table.to_json());
  } else {
    const BracketTable table = expand_rll(relation_from(rel), static_cast<int>(cutoff), expansion);
    doc.add("loop_algebra", compare_loop_algebra(table));
    doc.extra["table"] = json::parse(table.to_json());
  }
  return doc;
}

// ---------------------------------------------------------------- report-all

Doc cmd_report_all(const Params&, std::uint64_t seed) {
  Doc doc;
  auto merge = [&](const std::string& prefix, const Doc& d) {
    for (const auto& [k, v] : d.checks.items()) doc.checks[prefix + k] = v;
    doc.pass = doc.pass && d.pass;
  };
  auto params = [](std::map<std::string, std::string> flags) {
    Params p;
    p.flags = std::move(flags);
    return p;
  };
  merge("", cmd_ybe(params({{"trials", "20"}}), seed));
  merge("normalized_", cmd_ybe(params({{"trials", "3"}, {"mode", "normalized"}, {"order", "3"}}), seed));
  merge("", cmd_unitarity(params({{"trials", "20"}}), seed));
  for (int order = 1; order <= 4; ++order) {
    merge("order" + std::to_string(order) + "_", cmd_crossing(params({{"trials", "2"}, {"order", std::to_string(order)}}), seed));
  }
  {
    // Negative control: the bare matrix fails crossing by a known scalar.
    const Rat z(1), h(1);
    CheckReport c = crossing_check_bare(z, h);
    const Rat expected = (z + h) * (z + h) / (z * (z + h + h));
    c.identity = "crossing_bare_control";
    c.pass = !c.pass && c.notes.count("ratio") && c.notes.at("ratio") == expected.to_string();
    doc.add("crossing_bare_control", c);
  }
  doc.add("qdet_bare", qdet_check(RMode::bare(), Rat(1)));
  doc.add("qdet_normalized", qdet_check(RMode::normalized(4), Rat(1)));
  merge("", cmd_rll(params({{"samples", "2"}}), seed));
  const QkzSystem sys({Rat(0), Rat(7), Rat(17)}, Rat(1), RMode::bare(), Rat(1));
  merge("", flatness_all_pairs(sys));
  merge("normalized_", flatness_all_pairs(QkzSystem({Rat(0), Rat(3), Rat(-5, 2)}, Rat(1, 3), RMode::normalized(3))));
  {
    const std::vector<Rat> v{1, 2, 3, 4, 5, 6, 7, 8};
    const auto res = transport(sys, sys.bare_source(), {{1, 1}, {3, 1}, {1, -1}, {3, -1}}, v);
    CheckReport c;
    c.identity = "transport_loop";
    c.mode = "bare";
    c.params = sys.describe();
    c.pass = res.vector == v && res.system.points() == sys.points();
    doc.add("transport_loop", c);
  }
  for (int i = 1; i <= sys.n(); ++i) doc.add("fusion(" + std::to_string(i) + ")", fusion_crosscheck(sys, i));
  const BracketTable table = expand_all(2);
  doc.add("classical_loop_algebra", compare_loop_algebra(table));
  doc.add("classical_jacobi", jacobi_check(table));
  return doc;
}

struct Command {
  std::string name;
  std::string help;
  std::vector<std::string> options;
  std::vector<std::string> switches;
  std::function<Doc(const Params&, std::uint64_t)> run;
};

std::vector<Command> commands() {
  const std::vector<std::string> rmat{"mode", "order", "hbar", "trials"};
  auto with = [](std::vector<std::string> base, std::initializer_list<std::string> more) {
    base.insert(base.end(), more);
    return base;
  };
  const std::vector<std::string> system{"mode", "order", "hbar", "level", "points", "n"};
  return {
      {"ybe", "Yang-Baxter equation", with(rmat, {"u", "v"}), {}, cmd_ybe},
      {"unitarity", "R(z) R21(-z) = I", with(rmat, {"z"}), {}, cmd_unitarity},
      {"crossing", "(R(z+2h)^-1)^t2 = (R(z)^t2)^-1", with(rmat, {"z"}), {}, cmd_crossing},
      {"qdet", "quantum determinant of R as an L-operator", {"mode", "order", "hbar", "t", "sites"}, {}, cmd_qdet},
      {"rll", "sampled RLL relations in evaluation representations",
       {"mode", "order", "hbar", "relation", "realization", "sites", "samples", "trials", "level"},
       {"misorder"},
       cmd_rll},
      {"flatness", "discrete flatness of the qKZ operators over all pairs", system, {}, cmd_flatness},
      {"transport", "transport a vector along a lattice path", with(system, {"path", "vector"}), {}, cmd_transport},
      {"classical", "order-hbar^2 brackets from the RLL relations", {"relation", "cutoff", "M", "expansion"}, {}, cmd_classical},
      {"report-all", "run every check at default parameters", {}, {}, cmd_report_all},
  };
}

json error_doc(const std::string& command, const std::string& kind, const std::string& message) {
  json d;
  d["command"] = command;
  d["pass"] = false;
  d["error"] = {{"kind", kind}, {"message", message}};
  return d;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for the rational sl2 R-matrix and the qKZ difference equations", "qkz-lab"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  std::string config_path, out_path;
  std::uint64_t seed = 0;
  app.add_option("--config", config_path, "JSON config file");
  auto* out_opt = app.add_option("--out", out_path, "also write the JSON document to this file");
  auto* seed_opt = app.add_option("--seed", seed, "seed of the random trials (default 0)");
  (void)out_opt;

  const auto cmds = commands();
  std::map<std::string, std::string> values;
  std::map<std::string, bool> toggles;
  std::map<std::string, CLI::App*> subs;
  for (const auto& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    for (const auto& o : c.options) sub->add_option("--" + o, values[o]);
    for (const auto& s : c.switches) sub->add_flag("--" + s, toggles[s]);
    subs[c.name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "qkz-lab: " << e.what() << "\n";
    return kConfigError;
  }

  const Command* chosen = nullptr;
  for (const auto& c : cmds) {
    if (subs[c.name]->parsed()) chosen = &c;
  }
  if (chosen == nullptr) return kConfigError;

  json doc;
  int code = kPass;
  try {
    Params params;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw ConfigError("cannot read config file '" + config_path + "'");
      try {
        params.config = json::parse(in);
      } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
      }
      if (!params.config.is_object()) throw ConfigError("config must be a JSON object");
    }
    CLI::App* sub = subs[chosen->name];
    for (const auto& o : chosen->options) {
      if (sub->get_option("--" + o)->count() > 0) params.flags[o] = values[o];
    }
    for (const auto& s : chosen->switches) {
      if (toggles[s]) params.switches.insert(s);
    }
    if (seed_opt->count() == 0 && params.has("seed")) seed = static_cast<std::uint64_t>(params.integer("seed", 0));

    const Doc result = chosen->run(params, seed);
    doc = result.extra;
    doc["command"] = chosen->name;
    doc["seed"] = std::to_string(seed);
    doc["checks"] = result.checks;
    doc["pass"] = result.pass;
    code = result.pass ? kPass : kFail;
  } catch (const PathPoleEncountered& e) {
    doc = error_doc(chosen->name, "pole", e.what());
    doc["error"]["step"] = std::to_string(e.step());
    code = kPole;
  } catch (const PoleEncountered& e) {
    doc = error_doc(chosen->name, "pole", e.what());
    code = kPole;
  } catch (const SingularOperator& e) {
    doc = error_doc(chosen->name, "pole", e.what());
    code = kPole;
  } catch (const ConfigError& e) {
    doc = error_doc(chosen->name, "config", e.what());
    code = kConfigError;
  } catch (const BadLegIndex& e) {
    doc = error_doc(chosen->name, "config", e.what());
    code = kConfigError;
  } catch (const Error& e) {
    doc = error_doc(chosen->name, "error", e.what());
    code = kFail;
  }
  if (doc.contains("error")) err << "qkz-lab " << chosen->name << ": " << doc["error"]["message"].get<std::string>() << "\n";

  const std::string text = doc.dump(2) + "\n";
  out << text;
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) {
      err << "qkz-lab: cannot write '" << out_path << "'\n";
      return kConfigError;
    }
    f << text;
  }
  return code;
}

}  // namespace qkzlab::cli
