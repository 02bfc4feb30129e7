#include "nnc/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace nnc {

using nlohmann::json;

std::vector<double> SweepRange::values() const {
  if (!(step > 0)) throw ScenarioError("sweep: step must be > 0");
  if (to < from) throw ScenarioError("sweep: to must be >= from");
  std::vector<double> v;
  // fixed-count loop keeps the grid stable under rounding
  long n = std::lround((to - from) / step);
  for (long i = 0; i <= n; ++i) v.push_back(from + static_cast<double>(i) * step);
  return v;
}

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      throw ScenarioError("unknown key \"" + it.key() + "\" in " + where);
}

double num_field(const json& obj, const std::string& key, double fallback,
                 bool required = false) {
  if (!obj.contains(key)) {
    if (required) throw ScenarioError("missing required key \"" + key + "\"");
    return fallback;
  }
  if (!obj[key].is_number())
    throw ScenarioError("key \"" + key + "\" must be a number");
  return obj[key].get<double>();
}

std::vector<double> num_array(const json& obj, const std::string& key) {
  if (!obj[key].is_array())
    throw ScenarioError("key \"" + key + "\" must be an array of numbers");
  std::vector<double> v;
  for (const auto& e : obj[key]) {
    if (!e.is_number())
      throw ScenarioError("key \"" + key + "\" must contain numbers only");
    v.push_back(e.get<double>());
  }
  return v;
}

SweepRange sweep_range(const json& obj, const std::string& where) {
  reject_unknown(obj, {"from", "to", "step"}, where);
  SweepRange r;
  r.from = num_field(obj, "from", 0.0, true);
  r.to = num_field(obj, "to", 0.0, true);
  r.step = num_field(obj, "step", 1.0, true);
  return r;
}

Eigen::MatrixXd matrix_field(const json& arr, const std::string& where) {
  if (!arr.is_array() || arr.empty())
    throw ScenarioError(where + " must be a nonempty array of rows");
  const int n = static_cast<int>(arr.size());
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    if (!arr[static_cast<std::size_t>(i)].is_array() ||
        static_cast<int>(arr[static_cast<std::size_t>(i)].size()) != n)
      throw ScenarioError(where + " must be a square matrix");
    for (int j = 0; j < n; ++j) {
      const auto& e = arr[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (!e.is_number()) throw ScenarioError(where + " must contain numbers");
      m(i, j) = e.get<double>();
    }
  }
  return m;
}

}  // namespace

Scenario parse_scenario(const std::string& text, const std::string& name) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError(name + ": " + e.what());
  }
  if (!j.is_object()) throw ScenarioError(name + ": top level must be an object");

  static const std::set<std::string> top_keys = {
      "channel",     "geometry",   "path_loss",  "fading",      "powers",
      "power_sweep_db", "power_db", "power_scale", "strategies", "targets",
      "trials",      "opt_trials", "seed",       "sweep",       "weights",
      "rates",       "quant_vars", "quant_rates", "messages",   "blocks",
      "block_length", "output"};
  reject_unknown(j, top_keys, "scenario");

  Scenario s;
  s.name = name;

  if (j.contains("channel")) {
    if (!j["channel"].is_string())
      throw ScenarioError("channel must be a string");
    std::string c = j["channel"].get<std::string>();
    if (c != "general") {
      auto k = channel_from_string(c);
      if (!k) throw ScenarioError("unknown channel \"" + c + "\"");
      s.channel = *k;
    }
  }

  if (j.contains("geometry")) {
    const json& g = j["geometry"];
    if (!g.is_object()) throw ScenarioError("geometry must be an object");
    reject_unknown(g, {"distances", "coordinates"}, "geometry");
    if (g.contains("distances") == g.contains("coordinates"))
      throw ScenarioError("geometry needs exactly one of distances/coordinates");
    if (g.contains("distances")) {
      s.distances = matrix_field(g["distances"], "geometry.distances");
    } else {
      std::vector<std::array<double, 2>> pts;
      for (const auto& p : g["coordinates"]) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
          throw ScenarioError("geometry.coordinates must be [x, y] pairs");
        pts.push_back({p[0].get<double>(), p[1].get<double>()});
      }
      s.distances = distances_from_coordinates(pts);
    }
  }

  s.path_loss = num_field(j, "path_loss", 2.0);
  if (s.path_loss < 0) throw ScenarioError("path_loss must be >= 0");

  if (j.contains("fading")) {
    if (!j["fading"].is_string()) throw ScenarioError("fading must be a string");
    std::string f = j["fading"].get<std::string>();
    if (f == "none") s.fading = Fading::None;
    else if (f == "rayleigh") s.fading = Fading::Rayleigh;
    else throw ScenarioError("fading must be \"none\" or \"rayleigh\"");
  }

  if (j.contains("powers")) s.powers = num_array(j, "powers");
  if (j.contains("power_scale")) s.power_scale = num_array(j, "power_scale");
  if (j.contains("power_sweep_db"))
    s.power_sweep_db = sweep_range(j["power_sweep_db"], "power_sweep_db");
  if (j.contains("power_db")) s.power_db = num_field(j, "power_db", 0.0, true);
  if ((s.power_sweep_db || s.power_db) && s.power_scale.empty())
    throw ScenarioError("power sweeps need power_scale");

  if (j.contains("sweep")) {
    const json& w = j["sweep"];
    if (!w.is_object()) throw ScenarioError("sweep must be an object");
    reject_unknown(w, {"variable", "from", "to", "step"}, "sweep");
    if (!w.contains("variable") || !w["variable"].is_string())
      throw ScenarioError("sweep.variable must be a string");
    std::string var = w["variable"].get<std::string>();
    if (var != "relay_position")
      throw ScenarioError("unsupported sweep variable \"" + var + "\"");
    SweepRange r;
    r.from = num_field(w, "from", 0.0, true);
    r.to = num_field(w, "to", 0.0, true);
    r.step = num_field(w, "step", 1.0, true);
    s.position_sweep = r;
  }

  if (j.contains("strategies")) {
    if (!j["strategies"].is_array())
      throw ScenarioError("strategies must be an array of strings");
    for (const auto& e : j["strategies"]) {
      if (!e.is_string()) throw ScenarioError("strategies must contain strings");
      std::string v = e.get<std::string>();
      if (v != "cutset" && !strategy_from_string(v))
        throw ScenarioError("unknown strategy \"" + v + "\"");
      s.strategies.push_back(v);
    }
  }

  if (j.contains("targets")) {
    const json& t = j["targets"];
    if (!t.is_object()) throw ScenarioError("targets must be an object");
    reject_unknown(t, {"r1", "r2"}, "targets");
    s.targets.r1 = num_field(t, "r1", 0.0, true);
    s.targets.r2 = num_field(t, "r2", 0.0);
    if (!(s.targets.r1 > 0) || s.targets.r2 < 0)
      throw ScenarioError("targets must be positive");
    s.has_targets = true;
  }

  s.trials = static_cast<long>(num_field(j, "trials", 100000));
  s.opt_trials = static_cast<long>(num_field(j, "opt_trials", 20000));
  if (s.trials < 1 || s.opt_trials < 1)
    throw ScenarioError("trials must be >= 1");
  s.seed = static_cast<std::uint64_t>(num_field(j, "seed", 1));
  s.weights = static_cast<int>(num_field(j, "weights", 33));
  if (s.weights < 2) throw ScenarioError("weights must be >= 2");

  if (j.contains("rates")) s.rates = num_array(j, "rates");
  if (j.contains("quant_vars")) s.quant_vars = num_array(j, "quant_vars");
  if (j.contains("quant_rates")) s.quant_rates = num_array(j, "quant_rates");

  if (j.contains("messages")) {
    if (!j["messages"].is_array()) throw ScenarioError("messages must be an array");
    for (const auto& m : j["messages"]) {
      if (!m.is_object()) throw ScenarioError("messages entries must be objects");
      reject_unknown(m, {"source", "destinations"}, "messages");
      if (!m.contains("source") || !m["source"].is_number_integer())
        throw ScenarioError("messages.source must be an integer node id");
      if (!m.contains("destinations") || !m["destinations"].is_array())
        throw ScenarioError("messages.destinations must be an array");
      int src = m["source"].get<int>() - 1;
      std::vector<int> dst;
      for (const auto& d : m["destinations"]) {
        if (!d.is_number_integer())
          throw ScenarioError("messages.destinations must contain integers");
        dst.push_back(d.get<int>() - 1);
      }
      s.messages.emplace_back(src, dst);
    }
  }

  s.blocks = num_field(j, "blocks", 100.0);
  s.block_length = num_field(j, "block_length", 1000.0);
  if (!(s.blocks > 0) || !(s.block_length > 0))
    throw ScenarioError("blocks and block_length must be > 0");

  if (j.contains("output")) {
    if (!j["output"].is_string()) throw ScenarioError("output must be a string");
    s.output = j["output"].get<std::string>();
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError("cannot open scenario file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str(), path);
}

}  // namespace nnc
