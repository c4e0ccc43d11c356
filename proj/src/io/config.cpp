#include "tormhd/io/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "tormhd/error.hpp"

namespace tormhd::io {

using nlohmann::json;

namespace {

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

// Reads the fields of one JSON object and rejects keys nobody asked for.
class Fields {
 public:
  Fields(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_, "expected an object");
  }

  bool has(const std::string& k) {
    seen_.insert(k);
    return j_.contains(k);
  }
  const json& raw(const std::string& k) {
    seen_.insert(k);
    return j_.at(k);
  }
  std::string where(const std::string& k) const { return join(path_, k); }

  double number(const std::string& k, double def) {
    if (!has(k)) return def;
    const json& v = j_.at(k);
    if (!v.is_number()) throw ConfigError(where(k), "expected a number");
    return v.get<double>();
  }
  long long integer(const std::string& k, long long def) {
    if (!has(k)) return def;
    const json& v = j_.at(k);
    if (!v.is_number_integer()) throw ConfigError(where(k), "expected an integer");
    return v.get<long long>();
  }
  bool boolean(const std::string& k, bool def) {
    if (!has(k)) return def;
    const json& v = j_.at(k);
    if (!v.is_boolean()) throw ConfigError(where(k), "expected true or false");
    return v.get<bool>();
  }
  std::string string(const std::string& k, const std::string& def) {
    if (!has(k)) return def;
    const json& v = j_.at(k);
    if (!v.is_string()) throw ConfigError(where(k), "expected a string");
    return v.get<std::string>();
  }
  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (!seen_.count(it.key())) throw ConfigError(where(it.key()), "unknown key");
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

double exponent(const json& v, const std::string& path) {
  if (v.is_string() && v.get<std::string>() == "inf") return INFINITY;
  if (!v.is_number()) throw ConfigError(path, "expected a number or \"inf\"");
  return v.get<double>();
}

json exponent_json(double v) { return std::isinf(v) ? json("inf") : json(v); }

std::vector<CriterionSpec> parse_criteria(const json& arr, const std::string& path) {
  if (!arr.is_array()) throw ConfigError(path, "expected an array");
  std::vector<CriterionSpec> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    Fields f(arr[i], p);
    CriterionSpec s;
    if (!f.has("theorem")) throw ConfigError(f.where("theorem"), "required");
    try {
      s.theorem = parse_theorem(f.string("theorem", ""));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(f.where("theorem"), e.what());
    }
    s.smallness = f.boolean("smallness", false);
    if (!f.has("pairs")) throw ConfigError(f.where("pairs"), "required");
    const json& pairs = f.raw("pairs");
    if (!pairs.is_array() || pairs.empty()) throw ConfigError(f.where("pairs"), "expected a non-empty array");
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const std::string pp = f.where("pairs") + "[" + std::to_string(k) + "]";
      Fields e(pairs[k], pp);
      ExponentPair ep;
      if (!e.has("p")) throw ConfigError(e.where("p"), "required");
      ep.p = exponent(e.raw("p"), e.where("p"));
      if (!e.has("r")) throw ConfigError(e.where("r"), "required");
      ep.r = exponent(e.raw("r"), e.where("r"));
      e.finish();
      s.pairs.push_back(ep);
    }
    f.finish();
    out.push_back(std::move(s));
  }
  return out;
}

std::array<int, 4> parse_permutation(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 4) throw ConfigError(path, "expected four axis labels");
  std::array<int, 4> out{};
  std::set<int> seen;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!v[i].is_number_integer()) throw ConfigError(path, "expected integers");
    const int a = v[i].get<int>();
    if (a < 1 || a > 4 || !seen.insert(a).second) throw ConfigError(path, "must be a permutation of 1..4");
    out[i] = a - 1;
  }
  return out;
}

}  // namespace

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path, "cannot open for reading");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("", path + ": " + e.what());
  }
}

SimConfig parse_sim_config(const json& doc) {
  Fields top(doc, "");
  SimConfig c;
  if (top.has("grid")) {
    Fields g(top.raw("grid"), "grid");
    c.dim = static_cast<int>(g.integer("dim", c.dim));
    c.modes = static_cast<int>(g.integer("modes", c.modes));
    c.side_length = g.number("side_length", c.side_length);
    g.finish();
  }
  c.seed = static_cast<std::uint64_t>(top.integer("seed", 0));
  c.initial.seed = c.seed;
  if (top.has("initial")) {
    Fields f(top.raw("initial"), "initial");
    if (f.has("snapshot")) {
      c.initial_snapshot = f.string("snapshot", "");
      if (c.initial_snapshot.empty()) throw ConfigError(f.where("snapshot"), "empty path");
    } else {
      c.initial.preset = f.string("preset", c.initial.preset);
      c.initial.seed = static_cast<std::uint64_t>(f.integer("seed", static_cast<long long>(c.seed)));
      c.initial.decay = f.number("decay", c.initial.decay);
      c.initial.amplitude_u = f.number("amplitude_u", c.initial.amplitude_u);
      c.initial.amplitude_b = f.number("amplitude_b", c.initial.amplitude_b);
      c.initial.band = static_cast<int>(f.integer("band", c.initial.band));
      if (!(c.initial.decay >= 0.0)) throw ConfigError(f.where("decay"), "must be non-negative");
      bool known = false;
      for (const char* const* n = preset_names(); *n; ++n) known = known || c.initial.preset == *n;
      if (!known) throw ConfigError(f.where("preset"), "unknown preset " + c.initial.preset);
    }
    f.finish();
  }
  c.nu = top.number("nu", c.nu);
  c.eta = top.number("eta", c.eta);
  c.dt = top.number("dt", c.dt);
  c.t_end = top.number("t_end", c.t_end);
  c.output_every = static_cast<int>(top.integer("output_every", c.output_every));
  c.snapshot_every = static_cast<int>(top.integer("snapshot_every", c.snapshot_every));
  c.pressure_snapshots = top.boolean("pressure_snapshots", c.pressure_snapshots);
  if (top.has("dealias")) {
    try {
      c.dealias = parse_dealias(top.string("dealias", ""));
    } catch (const std::invalid_argument& e) {
      throw ConfigError("dealias", e.what());
    }
  }
  if (top.has("axis_permutation")) c.axis_permutation = parse_permutation(top.raw("axis_permutation"), "axis_permutation");
  if (top.has("criteria")) c.criteria = parse_criteria(top.raw("criteria"), "criteria");
  top.finish();

  c.grid();
  c.step_count();
  if (!(c.nu >= 0.0)) throw ConfigError("nu", "must be non-negative");
  if (!(c.eta >= 0.0)) throw ConfigError("eta", "must be non-negative");
  if (c.output_every < 1) throw ConfigError("output_every", "must be >= 1");
  if (c.snapshot_every < 0) throw ConfigError("snapshot_every", "must be >= 0");
  for (std::size_t i = 0; i < c.criteria.size(); ++i) {
    try {
      validate_spec(c.criteria[i], c.dim);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("criteria[" + std::to_string(i) + "]", e.what());
    }
  }
  return c;
}

SimConfig load_sim_config(const std::string& path) { return parse_sim_config(load_json(path)); }

json to_json(const SimConfig& c) {
  json j;
  j["grid"] = {{"dim", c.dim}, {"modes", c.modes}, {"side_length", c.side_length}};
  if (!c.initial_snapshot.empty()) {
    j["initial"] = {{"snapshot", c.initial_snapshot}};
  } else {
    j["initial"] = {{"preset", c.initial.preset},           {"seed", c.initial.seed},
                    {"decay", c.initial.decay},             {"amplitude_u", c.initial.amplitude_u},
                    {"amplitude_b", c.initial.amplitude_b}, {"band", c.initial.band}};
  }
  j["nu"] = c.nu;
  j["eta"] = c.eta;
  j["dt"] = c.dt;
  j["t_end"] = c.t_end;
  j["output_every"] = c.output_every;
  j["snapshot_every"] = c.snapshot_every;
  j["pressure_snapshots"] = c.pressure_snapshots;
  j["seed"] = c.seed;
  j["dealias"] = to_string(c.dealias);
  j["axis_permutation"] = json::array();
  for (int a : c.axis_permutation) j["axis_permutation"].push_back(a + 1);
  j["criteria"] = json::array();
  for (const auto& s : c.criteria) {
    json pairs = json::array();
    for (const auto& p : s.pairs) pairs.push_back({{"p", exponent_json(p.p)}, {"r", exponent_json(p.r)}});
    j["criteria"].push_back({{"theorem", to_string(s.theorem)}, {"pairs", pairs}, {"smallness", s.smallness}});
  }
  return j;
}

MonitorSpec parse_monitor_spec(const json& doc) {
  Fields top(doc, "");
  MonitorSpec m;
  if (top.has("criteria")) m.criteria = parse_criteria(top.raw("criteria"), "criteria");
  if (top.has("axis_permutation")) m.axis_permutation = parse_permutation(top.raw("axis_permutation"), "axis_permutation");
  top.finish();
  return m;
}

MonitorSpec load_monitor_spec(const std::string& path) { return parse_monitor_spec(load_json(path)); }

}  // namespace tormhd::io
