#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "nnc/outage.hpp"
#include "nnc/parallel.hpp"
#include "nnc/region.hpp"
#include "nnc/strategies.hpp"

namespace nnc {

namespace {

constexpr double kRelTol = 1e-7;
constexpr int kMaxSweeps = 200;
constexpr double kBinRateMax = 14.0;  // bits; far above any bin rate in use

double logmap(double x) { return std::pow(10.0, -6.0 + 14.0 * x); }

using Make = std::function<StrategyParams(const double*)>;

struct Space {
  int dims = 0;
  Make make;
};

Space space_for(ChannelKind k, Strategy s, bool outage, int route) {
  const double half_pi = 0.5 * std::numbers::pi;
  switch (k) {
    case ChannelKind::Relay:
      switch (s) {
        case Strategy::Df:
          return {1, [](const double* x) {
                    StrategyParams p;
                    p.beta = x[0];
                    return p;
                  }};
        case Strategy::CfS:
          if (!outage)
            return {1, [](const double* x) {
                      StrategyParams p;
                      p.sigma_hat[1] = logmap(x[0]);
                      return p;
                    }};
          return {2, [](const double* x) {
                    StrategyParams p;
                    p.sigma_hat[1] = logmap(x[0]);
                    p.r_bin[1] = kBinRateMax * x[1];
                    return p;
                  }};
        case Strategy::Snnc:
          return {1, [](const double* x) {
                    StrategyParams p;
                    p.sigma_hat[1] = logmap(x[0]);
                    return p;
                  }};
        default: break;
      }
      break;
    case ChannelKind::TwoRelay:
      switch (s) {
        case Strategy::Df:
          return {3, [route, half_pi](const double* x) {
                    StrategyParams p;
                    double a = x[0] * half_pi, b = x[1] * half_pi,
                           c = x[2] * half_pi;
                    p.theta = {std::cos(a), std::sin(a) * std::cos(b),
                               std::sin(a) * std::sin(b)};
                    p.theta2 = {std::cos(c), std::sin(c)};
                    p.df_route = route;
                    return p;
                  }};
        case Strategy::CfS:
          if (!outage)
            return {2, [](const double* x) {
                      StrategyParams p;
                      p.sigma_hat[1] = logmap(x[0]);
                      p.sigma_hat[2] = logmap(x[1]);
                      return p;
                    }};
          return {4, [](const double* x) {
                    StrategyParams p;
                    p.sigma_hat[1] = logmap(x[0]);
                    p.sigma_hat[2] = logmap(x[1]);
                    p.r_bin[1] = kBinRateMax * x[2];
                    p.r_bin[2] = kBinRateMax * x[3];
                    return p;
                  }};
        case Strategy::Snnc:
          return {2, [](const double* x) {
                    StrategyParams p;
                    p.sigma_hat[1] = logmap(x[0]);
                    p.sigma_hat[2] = logmap(x[1]);
                    return p;
                  }};
        case Strategy::Dqf:
          return {2, [route](const double* x) {
                    StrategyParams p;
                    p.df_route = route;
                    p.dqf_theta[static_cast<std::size_t>(route)] = x[0];
                    p.dqf_sigma[static_cast<std::size_t>(route)] = logmap(x[1]);
                    return p;
                  }};
        default: break;
      }
      break;
    case ChannelKind::Marc:
    case ChannelKind::Twrc:
      switch (s) {
        case Strategy::Df:
          return {3, [half_pi](const double* x) {
                    StrategyParams p;
                    p.beta = x[0];
                    p.gamma = x[1];
                    double t = x[2] * half_pi;
                    p.theta = {std::cos(t), std::sin(t)};
                    return p;
                  }};
        case Strategy::CfS:
          if (!outage)
            return {1, [](const double* x) {
                      StrategyParams p;
                      p.sigma_hat[2] = logmap(x[0]);
                      return p;
                    }};
          return {2, [](const double* x) {
                    StrategyParams p;
                    p.sigma_hat[2] = logmap(x[0]);
                    p.r_bin[2] = kBinRateMax * x[1];
                    return p;
                  }};
        case Strategy::Snnc:
          return {1, [](const double* x) {
                    StrategyParams p;
                    p.sigma_hat[2] = logmap(x[0]);
                    return p;
                  }};
        default: break;
      }
      break;
  }
  throw std::invalid_argument("no parameter space for this channel/strategy");
}

struct SearchResult {
  std::vector<double> x;
  double value = 0.0;
  bool converged = true;
};

// Coarse multistart lattice, rescoring of the leaders with the accurate
// objective, then coordinate/diagonal descent with shrinking steps.
// Deterministic: lattice order breaks value ties.
SearchResult maximize(int dims, int grid_pts,
                      const std::function<double(const double*)>& coarse,
                      const std::function<double(const double*)>& fine) {
  long total = 1;
  for (int d = 0; d < dims; ++d) total *= grid_pts;

  std::vector<double> values(static_cast<std::size_t>(total));
  auto point_at = [&](long idx, double* x) {
    for (int d = 0; d < dims; ++d) {
      x[d] = grid_pts == 1
                 ? 0.5
                 : static_cast<double>(idx % grid_pts) / (grid_pts - 1);
      idx /= grid_pts;
    }
  };
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(effective_threads())
#endif
  for (long i = 0; i < total; ++i) {
    double x[8];
    point_at(i, x);
    values[static_cast<std::size_t>(i)] = coarse(x);
  }

  const int keep = std::min<long>(8, total);
  std::vector<long> order(static_cast<std::size_t>(total));
  for (long i = 0; i < total; ++i) order[static_cast<std::size_t>(i)] = i;
  std::partial_sort(order.begin(), order.begin() + keep, order.end(),
                    [&](long a, long b) {
                      double va = values[static_cast<std::size_t>(a)];
                      double vb = values[static_cast<std::size_t>(b)];
                      return va != vb ? va > vb : a < b;
                    });

  std::vector<double> best(static_cast<std::size_t>(dims));
  double fbest = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < keep; ++j) {
    double x[8];
    point_at(order[static_cast<std::size_t>(j)], x);
    double v = fine(x);
    if (v > fbest) {
      fbest = v;
      best.assign(x, x + dims);
    }
  }

  double h = 1.0 / std::max(4, grid_pts);
  bool converged = false;
  int sweeps = 0;
  while (sweeps < kMaxSweeps) {
    ++sweeps;
    double cand[8];
    double fcand_best = fbest;
    std::vector<double> move;
    auto probe = [&](const double* y) {
      double v = fine(y);
      if (v > fcand_best) {
        fcand_best = v;
        move.assign(y, y + dims);
      }
    };
    for (int d = 0; d < dims; ++d)
      for (double sgn : {+1.0, -1.0}) {
        std::copy(best.begin(), best.end(), cand);
        cand[d] = std::clamp(cand[d] + sgn * h, 0.0, 1.0);
        probe(cand);
      }
    if (dims >= 2 && dims <= 3) {
      const int corners = 1 << dims;
      for (int m = 0; m < corners; ++m) {
        std::copy(best.begin(), best.end(), cand);
        for (int d = 0; d < dims; ++d)
          cand[d] = std::clamp(cand[d] + (((m >> d) & 1) ? h : -h), 0.0, 1.0);
        probe(cand);
      }
    }
    if (!move.empty()) {
      double gain = fcand_best - fbest;
      best = move;
      fbest = fcand_best;
      if (gain < kRelTol * (std::abs(fbest) + 1e-9) && h < 1e-6) {
        converged = true;
        break;
      }
    } else {
      h *= 0.5;
      if (h < 1e-12) {
        converged = true;
        break;
      }
    }
  }
  return {best, fbest, converged};
}

OptResult run_search(ChannelKind k, Strategy s, bool outage, int route,
                     int grid_pts,
                     const std::function<double(const StrategyParams&)>& coarse,
                     const std::function<double(const StrategyParams&)>& fine) {
  Space sp = space_for(k, s, outage, route);
  auto c = [&](const double* x) { return coarse(sp.make(x)); };
  auto f = [&](const double* x) { return fine(sp.make(x)); };
  auto r = maximize(sp.dims, grid_pts, c, f);
  OptResult out;
  out.params = sp.make(r.x.data());
  out.value = r.value;
  out.converged = r.converged;
  return out;
}

int grid_for_dims(int dims, bool outage) {
  if (!outage) {
    switch (dims) {
      case 1: return 33;
      case 2: return 16;
      case 3: return 16;
      default: return 8;
    }
  }
  switch (dims) {
    case 1: return 24;
    case 2: return 16;
    case 3: return 10;
    default: return 6;
  }
}

}  // namespace

OptResult optimize_rate(ChannelKind k, Strategy s, const GainMatrix& g,
                        const std::vector<double>& powers, double weight) {
  if (s == Strategy::SnncDf) {
    std::vector<Strategy> parts{Strategy::Df};
    if (k == ChannelKind::TwoRelay) parts.push_back(Strategy::Dqf);
    parts.push_back(Strategy::Snnc);
    OptResult best;
    bool first = true;
    for (Strategy part : parts) {
      OptResult r = optimize_rate(k, part, g, powers, weight);
      if (first || r.value > best.value + 1e-15) {
        best = r;
        first = false;
      }
    }
    return best;
  }
  if ((s == Strategy::Df || s == Strategy::Dqf) && k == ChannelKind::TwoRelay) {
    // the two relay orders are optimized separately
    OptResult best;
    for (int route : {0, 1}) {
      auto obj = [&](const StrategyParams& p) {
        return weighted_support(k, evaluate(s, k, g, powers, p), weight);
      };
      int dims = space_for(k, s, false, route).dims;
      OptResult r = run_search(k, s, false, route, grid_for_dims(dims, false),
                               obj, obj);
      if (route == 0 || r.value > best.value + 1e-15) best = r;
    }
    return best;
  }
  auto obj = [&](const StrategyParams& p) {
    return weighted_support(k, evaluate(s, k, g, powers, p), weight);
  };
  int dims = space_for(k, s, false, 0).dims;
  return run_search(k, s, false, 0, grid_for_dims(dims, false), obj, obj);
}

OptResult optimize_outage(ChannelKind k, Strategy s, const NetworkModel& model,
                          const Targets& targets, long trials,
                          std::uint64_t seed) {
  if (s == Strategy::SnncDf) {
    // Each ingredient is tuned for its own outage; the mixed scheme then
    // switches between them per realization.
    StrategyParams merged;
    OptResult df = optimize_outage(k, Strategy::Df, model, targets, trials, seed);
    merged.beta = df.params.beta;
    merged.gamma = df.params.gamma;
    merged.theta = df.params.theta;
    merged.theta2 = df.params.theta2;
    merged.df_route = std::max(0, df.params.df_route);
    if (k == ChannelKind::TwoRelay) {
      for (int route : {0, 1}) {
        auto obj = [&](const StrategyParams& p) {
          return -outage_fraction(k, Strategy::Dqf, model, targets, p, trials,
                                  seed);
        };
        auto cheap = [&](const StrategyParams& p) {
          return -outage_fraction(k, Strategy::Dqf, model, targets, p,
                                  std::min<long>(trials, 1500), seed);
        };
        OptResult dq = run_search(k, Strategy::Dqf, true, route,
                                  grid_for_dims(2, true), cheap, obj);
        merged.dqf_theta[static_cast<std::size_t>(route)] =
            dq.params.dqf_theta[static_cast<std::size_t>(route)];
        merged.dqf_sigma[static_cast<std::size_t>(route)] =
            dq.params.dqf_sigma[static_cast<std::size_t>(route)];
      }
    }
    OptResult sn = optimize_outage(k, Strategy::Snnc, model, targets, trials,
                                   seed + 101);
    merged.sigma_hat = sn.params.sigma_hat;
    OptResult out;
    out.params = merged;
    out.value = outage_fraction(k, s, model, targets, merged, trials, seed);
    out.converged = df.converged && sn.converged;
    return out;
  }

  auto fine = [&](const StrategyParams& p) {
    return -outage_fraction(k, s, model, targets, p, trials, seed);
  };
  auto coarse = [&](const StrategyParams& p) {
    return -outage_fraction(k, s, model, targets, p,
                            std::min<long>(trials, 1500), seed);
  };

  if ((s == Strategy::Df || s == Strategy::Dqf) && k == ChannelKind::TwoRelay) {
    // route chosen from the statistics: keep the one with smaller outage
    OptResult best;
    for (int route : {0, 1}) {
      int dims = space_for(k, s, true, route).dims;
      OptResult r = run_search(k, s, true, route, grid_for_dims(dims, true),
                               coarse, fine);
      if (route == 0 || r.value > best.value + 1e-15) best = r;
    }
    best.value = -best.value;
    return best;
  }
  int dims = space_for(k, s, true, 0).dims;
  OptResult r =
      run_search(k, s, true, 0, grid_for_dims(dims, true), coarse, fine);
  r.value = -r.value;
  return r;
}

OptResult optimize_params(ChannelKind k, Strategy s, const GainMatrix* gains,
                          const NetworkModel* model,
                          const std::vector<double>& powers,
                          const Objective& obj) {
  if (obj.kind == Objective::Kind::MaxRate) {
    if (!gains) throw std::invalid_argument("optimize_params: gains required");
    return optimize_rate(k, s, *gains, powers, obj.weight);
  }
  if (!model) throw std::invalid_argument("optimize_params: model required");
  return optimize_outage(k, s, *model, obj.targets, obj.trials, obj.seed);
}

}  // namespace nnc
