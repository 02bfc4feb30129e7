#include "nnc/outage.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nnc/parallel.hpp"

namespace nnc {

namespace {

NetworkModel scaled(const NetworkModel& base, const std::vector<double>& scale,
                    double p_linear) {
  NetworkModel m = base;
  m.powers.resize(scale.size());
  for (std::size_t i = 0; i < scale.size(); ++i)
    m.powers[i] = scale[i] * p_linear;
  return m;
}

}  // namespace

std::array<double, 2> wilson_interval(long misses, long trials) {
  const double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(misses) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

double outage_fraction(ChannelKind kind, Strategy strat,
                       const NetworkModel& model, const Targets& targets,
                       const StrategyParams& params, long trials,
                       std::uint64_t seed, Execution exec) {
  if (model.fading != Fading::Rayleigh)
    throw std::invalid_argument("outage: model must use Rayleigh fading");
  const Rng root(seed);
  long miss = 0;
  if (exec == Execution::Serial) {
    GainMatrix buf;
    for (long i = 0; i < trials; ++i) {
      realize_gains_into(model, root.split(static_cast<std::uint64_t>(i)), buf);
      auto o = evaluate_faded(strat, kind, buf, model.powers, params, targets);
      if (!meets_targets(kind, o, targets)) ++miss;
    }
    return static_cast<double>(miss) / static_cast<double>(trials);
  }
#ifdef _OPENMP
#pragma omp parallel num_threads(effective_threads()) reduction(+ : miss)
  {
    GainMatrix buf;
#pragma omp for schedule(static)
    for (long i = 0; i < trials; ++i) {
      realize_gains_into(model, root.split(static_cast<std::uint64_t>(i)), buf);
      auto o = evaluate_faded(strat, kind, buf, model.powers, params, targets);
      if (!meets_targets(kind, o, targets)) ++miss;
    }
  }
  return static_cast<double>(miss) / static_cast<double>(trials);
#else
  return outage_fraction(kind, strat, model, targets, params, trials, seed,
                         Execution::Serial);
#endif
}

OutageEstimate estimate_outage(const OutageSpec& spec, Execution exec) {
  if (spec.model.fading != Fading::Rayleigh)
    throw std::invalid_argument("outage: model must use Rayleigh fading");
  if (spec.trials < 1) throw std::invalid_argument("outage: trials must be >= 1");
  if (!(spec.targets.r1 > 0.0))
    throw std::invalid_argument("outage: target rate must be > 0");
  const Rng root(spec.seed);

  long miss = 0;
  std::map<std::string, long> tally;

  auto run_range = [&](long lo, long hi, long& local_miss,
                       std::map<std::string, long>& local_tally) {
    GainMatrix buf;
    for (long i = lo; i < hi; ++i) {
      realize_gains_into(spec.model, root.split(static_cast<std::uint64_t>(i)),
                         buf);
      auto o = evaluate_faded(spec.strategy, spec.kind, buf, spec.model.powers,
                              spec.params, spec.targets);
      if (!meets_targets(spec.kind, o, spec.targets)) ++local_miss;
      ++local_tally[o.branch];
    }
  };

  if (exec == Execution::Serial || effective_threads() == 1) {
    run_range(0, spec.trials, miss, tally);
  } else {
#ifdef _OPENMP
    const int nt = effective_threads();
    std::vector<long> misses(static_cast<std::size_t>(nt), 0);
    std::vector<std::map<std::string, long>> tallies(
        static_cast<std::size_t>(nt));
#pragma omp parallel num_threads(nt)
    {
      const int tid = omp_get_thread_num();
      const long chunk = (spec.trials + nt - 1) / nt;
      const long lo = std::min<long>(spec.trials, tid * chunk);
      const long hi = std::min<long>(spec.trials, lo + chunk);
      run_range(lo, hi, misses[static_cast<std::size_t>(tid)],
                tallies[static_cast<std::size_t>(tid)]);
    }
    for (int tIdx = 0; tIdx < nt; ++tIdx) {
      miss += misses[static_cast<std::size_t>(tIdx)];
      for (const auto& [k, v] : tallies[static_cast<std::size_t>(tIdx)])
        tally[k] += v;
    }
#else
    run_range(0, spec.trials, miss, tally);
#endif
  }

  OutageEstimate est;
  est.p_hat = static_cast<double>(miss) / static_cast<double>(spec.trials);
  est.trials = spec.trials;
  auto ci = wilson_interval(miss, spec.trials);
  est.ci_lo = ci[0];
  est.ci_hi = ci[1];
  est.branch_tally = std::move(tally);
  return est;
}

OutageSweep sweep_outage(const NetworkModel& base, ChannelKind kind,
                         const std::vector<Strategy>& strategies,
                         const Targets& targets,
                         const std::vector<double>& power_grid_db,
                         const std::vector<double>& power_scale, long trials,
                         long opt_trials, std::uint64_t seed, Execution exec) {
  if (static_cast<int>(power_scale.size()) != base.num_nodes)
    throw std::invalid_argument("sweep_outage: power scale size mismatch");
  OutageSweep sweep;
  sweep.power_grid_db = power_grid_db;
  for (double pdb : power_grid_db) {
    NetworkModel m = scaled(base, power_scale, db_to_linear(pdb));
    m.validate();
    for (Strategy s : strategies) {
      // separate stream for the optimizer so parameters are not tuned on
      // the evaluation draws
      auto opt = optimize_outage(kind, s, m, targets, opt_trials,
                                 seed ^ 0x5eedf00dULL);
      OutageSpec os;
      os.model = m;
      os.kind = kind;
      os.strategy = s;
      os.targets = targets;
      os.trials = trials;
      os.seed = seed;
      os.params = opt.params;
      OutageRow row;
      row.p_db = pdb;
      row.strategy = s;
      row.est = estimate_outage(os, exec);
      row.params = opt.params;
      sweep.rows.push_back(std::move(row));
    }
  }
  return sweep;
}

double power_db_at(const std::vector<double>& p_db,
                   const std::vector<double>& p_hat, double level,
                   long trials) {
  const double floor_p = 0.25 / static_cast<double>(std::max<long>(trials, 1));
  auto lg = [&](double p) { return std::log10(std::max(p, floor_p)); };
  for (std::size_t i = 0; i + 1 < p_db.size(); ++i) {
    double a = p_hat[i], b = p_hat[i + 1];
    if ((a >= level && b <= level) || (a <= level && b >= level)) {
      double la = lg(a), lb = lg(b), lt = std::log10(level);
      if (la == lb) return p_db[i];
      double t = (lt - la) / (lb - la);
      return p_db[i] + t * (p_db[i + 1] - p_db[i]);
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace nnc
