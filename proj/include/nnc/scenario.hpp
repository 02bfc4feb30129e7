#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "nnc/model.hpp"
#include "nnc/strategies.hpp"

namespace nnc {

// Scenario file problem: unknown keys, bad types, inconsistent shapes.
struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SweepRange {
  double from = 0, to = 0, step = 1;
  std::vector<double> values() const;
};

// One parsed scenario file.  Node indices inside the file are 1-based (the
// channel layouts' numbering); they are 0-based here.
struct Scenario {
  std::string name;

  std::optional<ChannelKind> channel;  // nullopt: general network
  std::optional<Eigen::MatrixXd> distances;
  double path_loss = 2.0;
  Fading fading = Fading::None;

  std::vector<double> powers;                 // fixed linear powers
  std::optional<SweepRange> power_sweep_db;   // with power_scale
  std::optional<double> power_db;             // single point with power_scale
  std::vector<double> power_scale;

  std::optional<SweepRange> position_sweep;  // relay placement on a unit line

  std::vector<std::string> strategies;
  Targets targets;
  bool has_targets = false;

  long trials = 100000;
  long opt_trials = 20000;
  std::uint64_t seed = 1;
  int weights = 33;

  std::vector<double> rates;        // per-node message rates
  std::vector<double> quant_vars;   // per-node; 0 = no quantizer
  std::vector<double> quant_rates;  // explicit flooding rates (optional)
  std::vector<std::pair<int, std::vector<int>>> messages;  // source -> dests

  double blocks = 100.0;
  double block_length = 1000.0;

  std::string output;  // default CSV path, overridable on the command line
};

Scenario parse_scenario(const std::string& json_text, const std::string& name);
Scenario load_scenario(const std::string& path);

// Command entry points; each returns the full CSV body.
std::string cmd_rate(const Scenario&);
std::string cmd_outage(const Scenario&);
std::string cmd_region(const Scenario&);
std::string cmd_decodable_set(const Scenario&);
std::string cmd_flooding(const Scenario&);

}  // namespace nnc
