#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nnc/model.hpp"
#include "nnc/strategies.hpp"

namespace nnc {

struct OutageSpec {
  NetworkModel model;  // Rayleigh fading required
  ChannelKind kind = ChannelKind::Relay;
  Strategy strategy = Strategy::Snnc;
  Targets targets;
  long trials = 100000;
  std::uint64_t seed = 1;
  StrategyParams params;  // chosen from the statistics beforehand
};

struct OutageEstimate {
  double p_hat = 0.0;
  long trials = 0;
  double ci_lo = 0.0, ci_hi = 0.0;  // 95% Wilson interval
  std::map<std::string, long> branch_tally;
};

enum class Execution { Serial, Parallel };

// Serial reference and OpenMP kernel produce bit-identical results: trial i
// always draws its gains from substream i and the reductions are
// order-independent integer sums.
OutageEstimate estimate_outage(const OutageSpec&, Execution = Execution::Parallel);

// Lean counting kernel shared with the parameter optimizer (no tallies).
double outage_fraction(ChannelKind, Strategy, const NetworkModel&,
                       const Targets&, const StrategyParams&, long trials,
                       std::uint64_t seed, Execution = Execution::Parallel);

std::array<double, 2> wilson_interval(long misses, long trials);

struct OutageRow {
  double p_db = 0.0;
  Strategy strategy = Strategy::Snnc;
  OutageEstimate est;
  StrategyParams params;
};

struct OutageSweep {
  std::vector<double> power_grid_db;
  std::vector<OutageRow> rows;
};

// Per-power estimates with common random numbers across strategies and
// power points (same channel draws), which is what makes dB gaps readable
// with far fewer trials.  Parameters are re-optimized from the statistics
// at every power point using `opt_trials` inner samples.
OutageSweep sweep_outage(const NetworkModel& base, ChannelKind,
                         const std::vector<Strategy>&, const Targets&,
                         const std::vector<double>& power_grid_db,
                         const std::vector<double>& power_scale, long trials,
                         long opt_trials, std::uint64_t seed,
                         Execution = Execution::Parallel);

// Power (dB) at which the outage curve crosses `level`, by log-linear
// interpolation between grid points; NaN when the grid never crosses.
double power_db_at(const std::vector<double>& p_db,
                   const std::vector<double>& p_hat, double level,
                   long trials);

}  // namespace nnc
