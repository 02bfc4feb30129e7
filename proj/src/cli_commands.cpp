#include <algorithm>
#include <cmath>
#include <set>

#include "nnc/csv.hpp"
#include "nnc/decodable_set.hpp"
#include "nnc/flooding.hpp"
#include "nnc/gauss_info.hpp"
#include "nnc/outage.hpp"
#include "nnc/region.hpp"
#include "nnc/scenario.hpp"

namespace nnc {

namespace {

void check_channel_powers(ChannelKind k, const std::vector<double>& p) {
  if (static_cast<int>(p.size()) != channel_nodes(k))
    throw ScenarioError("powers must list one entry per node");
  int sink = -1;
  if (k == ChannelKind::Relay) sink = 2;
  if (k == ChannelKind::TwoRelay || k == ChannelKind::Marc) sink = 3;
  if (sink >= 0 && p[static_cast<std::size_t>(sink)] != 0.0)
    throw ScenarioError("the destination node must have power 0");
}

Eigen::MatrixXd relay_line_distances(double x) {
  if (!(x > 0.0) || !(x < 1.0))
    throw ScenarioError("relay_position must lie strictly inside (0, 1)");
  Eigen::MatrixXd d(3, 3);
  d << 0, x, 1, x, 0, 1 - x, 1, 1 - x, 0;
  return d;
}

NetworkModel make_model(const Scenario& s, const Eigen::MatrixXd& dist,
                        const std::vector<double>& powers) {
  NetworkModel m;
  m.num_nodes = static_cast<int>(dist.rows());
  m.distances = dist;
  m.path_loss = s.path_loss;
  m.powers = powers;
  m.fading = s.fading;
  m.validate();
  return m;
}

std::vector<double> scaled_powers(const std::vector<double>& scale, double db) {
  std::vector<double> p(scale.size());
  double lin = db_to_linear(db);
  for (std::size_t i = 0; i < scale.size(); ++i) p[i] = scale[i] * lin;
  return p;
}

const Eigen::MatrixXd& need_distances(const Scenario& s) {
  if (!s.distances) throw ScenarioError("scenario needs a geometry section");
  return *s.distances;
}

ChannelKind need_channel(const Scenario& s) {
  if (!s.channel) throw ScenarioError("scenario needs a channel kind");
  return *s.channel;
}

Strategy need_strategy(const std::string& name) {
  auto s = strategy_from_string(name);
  if (!s) throw ScenarioError("unknown strategy \"" + name + "\"");
  return *s;
}

}  // namespace

std::string cmd_rate(const Scenario& s) {
  ChannelKind kind = need_channel(s);
  if (s.fading != Fading::None)
    throw ScenarioError("rate command evaluates fixed gains; use fading \"none\"");
  if (s.strategies.empty()) throw ScenarioError("empty strategy list");

  struct Point {
    double sweep_var;
    Eigen::MatrixXd dist;
    std::vector<double> powers;
  };
  std::vector<Point> points;

  if (s.position_sweep) {
    if (kind != ChannelKind::Relay)
      throw ScenarioError("relay_position sweeps apply to the relay channel");
    if (s.powers.empty()) throw ScenarioError("position sweeps need powers");
    check_channel_powers(kind, s.powers);
    for (double x : s.position_sweep->values())
      points.push_back({x, relay_line_distances(x), s.powers});
  } else if (s.power_sweep_db) {
    check_channel_powers(kind, s.power_scale);
    for (double db : s.power_sweep_db->values())
      points.push_back({db, need_distances(s), scaled_powers(s.power_scale, db)});
  } else if (s.power_db) {
    check_channel_powers(kind, s.power_scale);
    points.push_back({*s.power_db, need_distances(s),
                      scaled_powers(s.power_scale, *s.power_db)});
  } else {
    if (s.powers.empty()) throw ScenarioError("scenario needs powers");
    check_channel_powers(kind, s.powers);
    points.push_back({0.0, need_distances(s), s.powers});
  }

  CsvWriter csv;
  csv.header({"sweep_var", "strategy", "rate_bits", "branch", "params"});
  for (const auto& pt : points) {
    NetworkModel m = make_model(s, pt.dist, pt.powers);
    GainMatrix g = realize_gains(m, Rng(s.seed));
    for (const std::string& name : s.strategies) {
      if (name == "cutset") {
        if (rate_components(kind) != 1)
          throw ScenarioError("cutset rows are defined for single-rate channels");
        GaussSpec spec = GaussSpec::independent(g, pt.powers);
        double v = cutset_upper_bound(spec, 0, channel_nodes(kind) - 1);
        csv.field(pt.sweep_var).field(name).field(v).field("-").field("-");
        csv.end_row();
        continue;
      }
      Strategy strat = need_strategy(name);
      auto opt = optimize_rate(kind, strat, g, pt.powers, -1.0);
      auto outcome = evaluate(strat, kind, g, pt.powers, opt.params);
      double rate = weighted_support(kind, outcome, -1.0);
      csv.field(pt.sweep_var)
          .field(to_string(strat))
          .field(rate)
          .field(outcome.branch)
          .field(opt.params.describe());
      csv.end_row();
    }
  }
  return csv.str();
}

std::string cmd_outage(const Scenario& s) {
  ChannelKind kind = need_channel(s);
  if (s.fading != Fading::Rayleigh)
    throw ScenarioError("outage command needs fading \"rayleigh\"");
  if (!s.has_targets) throw ScenarioError("outage command needs targets");
  if (rate_components(kind) > 1 && !(s.targets.r2 > 0))
    throw ScenarioError("two-user channels need both targets");
  if (!s.power_sweep_db && !s.power_db)
    throw ScenarioError("outage command needs power_sweep_db or power_db");
  if (s.strategies.empty()) throw ScenarioError("empty strategy list");
  check_channel_powers(kind, s.power_scale);

  std::vector<Strategy> strategies;
  for (const auto& n : s.strategies) strategies.push_back(need_strategy(n));
  std::vector<double> grid = s.power_sweep_db
                                 ? s.power_sweep_db->values()
                                 : std::vector<double>{*s.power_db};

  NetworkModel base = make_model(s, need_distances(s), s.power_scale);
  OutageSweep sweep =
      sweep_outage(base, kind, strategies, s.targets, grid, s.power_scale,
                   s.trials, s.opt_trials, s.seed);

  CsvWriter csv;
  csv.header({"P_dB", "strategy", "p_out", "ci_lo", "ci_hi", "trials"});
  for (const auto& row : sweep.rows) {
    csv.field(row.p_db)
        .field(to_string(row.strategy))
        .field(row.est.p_hat)
        .field(row.est.ci_lo)
        .field(row.est.ci_hi)
        .field(row.est.trials);
    csv.end_row();
  }
  return csv.str();
}

std::string cmd_region(const Scenario& s) {
  ChannelKind kind = need_channel(s);
  if (rate_components(kind) < 2)
    throw ScenarioError("region command needs a two-user channel");
  if (s.fading != Fading::None)
    throw ScenarioError("region command evaluates fixed gains; use fading \"none\"");

  std::vector<double> powers;
  if (s.power_db) {
    check_channel_powers(kind, s.power_scale);
    powers = scaled_powers(s.power_scale, *s.power_db);
  } else {
    if (s.powers.empty()) throw ScenarioError("scenario needs powers");
    check_channel_powers(kind, s.powers);
    powers = s.powers;
  }
  NetworkModel m = make_model(s, need_distances(s), powers);
  GainMatrix g = realize_gains(m, Rng(s.seed));

  std::vector<std::string> names = s.strategies;
  if (names.empty()) names = {"df", "cf_s", "snnc", "snnc_df"};
  auto grid = default_weight_grid(s.weights);

  CsvWriter csv;
  csv.header({"strategy", "R1", "R2"});
  RateRegion df_region, snnc_region;
  bool have_df = false, have_snnc = false;
  auto ensure = [&](Strategy strat) -> RateRegion {
    return sweep_region(kind, g, powers, strat, grid);
  };
  auto emit = [&](const std::string& name, const RateRegion& r) {
    for (const auto& p : r.frontier) {
      csv.field(name).field(p[0]).field(p[1]);
      csv.end_row();
    }
  };
  for (const std::string& name : names) {
    Strategy strat = need_strategy(name);
    if (strat == Strategy::SnncDf) {
      if (!have_df) { df_region = ensure(Strategy::Df); have_df = true; }
      if (!have_snnc) { snnc_region = ensure(Strategy::Snnc); have_snnc = true; }
      emit(name, union_and_hull({df_region, snnc_region}, true));
      continue;
    }
    RateRegion r = ensure(strat);
    if (strat == Strategy::Df) { df_region = r; have_df = true; }
    if (strat == Strategy::Snnc) { snnc_region = r; have_snnc = true; }
    emit(name, r);
  }
  return csv.str();
}

namespace {

GaussSpec general_spec(const Scenario& s, const NetworkModel& m, GainMatrix& g) {
  g = realize_gains(m, Rng(s.seed));
  GaussSpec spec = GaussSpec::independent(g, m.powers);
  if (!s.quant_vars.empty()) {
    if (static_cast<int>(s.quant_vars.size()) != m.num_nodes)
      throw ScenarioError("quant_vars must list one entry per node");
    for (int i = 0; i < m.num_nodes; ++i)
      if (s.quant_vars[static_cast<std::size_t>(i)] > 0)
        spec.set_quantizer(i, s.quant_vars[static_cast<std::size_t>(i)]);
  }
  return spec;
}

std::string join_nodes(const std::set<int>& t) {
  if (t.empty()) return "-";
  std::string out;
  for (int i : t) {
    if (!out.empty()) out += '+';
    out += std::to_string(i + 1);
  }
  return out;
}

}  // namespace

std::string cmd_decodable_set(const Scenario& s) {
  if (s.powers.empty()) throw ScenarioError("scenario needs powers");
  NetworkModel m = make_model(s, need_distances(s), s.powers);
  if (s.messages.empty()) throw ScenarioError("decodable-set needs messages");
  if (static_cast<int>(s.rates.size()) != m.num_nodes)
    throw ScenarioError("decodable-set needs per-node rates");

  GainMatrix g;
  GaussSpec spec = general_spec(s, m, g);

  std::vector<std::set<int>> required(static_cast<std::size_t>(m.num_nodes));
  for (const auto& [src, dests] : s.messages) {
    if (src < 0 || src >= m.num_nodes)
      throw ScenarioError("messages.source out of range");
    for (int d : dests) {
      if (d < 0 || d >= m.num_nodes)
        throw ScenarioError("messages.destinations out of range");
      required[static_cast<std::size_t>(d)].insert(src);
    }
  }

  CsvWriter csv;
  csv.header({"node", "t_star", "candidates", "exhaustive_match"});
  for (int k = 0; k < m.num_nodes; ++k) {
    const auto& req = required[static_cast<std::size_t>(k)];
    if (req.empty()) continue;
    DecodeContext ctx;
    ctx.node = k;
    ctx.required = req;
    for (int i = 0; i < m.num_nodes; ++i)
      if (i != k && !req.count(i)) ctx.candidates.insert(i);
    ctx.rates = s.rates;
    auto tstar = largest_decodable_set(spec, ctx);
    std::string match = "-";
    if (ctx.candidates.size() <= 12) {
      auto ex = largest_decodable_set_exhaustive(spec, ctx);
      match = (ex == tstar) ? "yes" : "no";
    }
    csv.field(k + 1)
        .field(join_nodes(tstar))
        .field(join_nodes(ctx.candidates))
        .field(match);
    csv.end_row();
  }
  return csv.str();
}

std::string cmd_flooding(const Scenario& s) {
  if (s.powers.empty()) throw ScenarioError("scenario needs powers");
  NetworkModel m = make_model(s, need_distances(s), s.powers);
  GainMatrix g;
  GaussSpec spec = general_spec(s, m, g);
  CapacityGraph graph = link_capacities(spec);

  std::vector<double> qrates(static_cast<std::size_t>(m.num_nodes), 0.0);
  if (!s.quant_rates.empty()) {
    if (static_cast<int>(s.quant_rates.size()) != m.num_nodes)
      throw ScenarioError("quant_rates must list one entry per node");
    qrates = s.quant_rates;
  } else {
    for (int i = 0; i < m.num_nodes; ++i)
      if (spec.has_quantizer(i)) qrates[static_cast<std::size_t>(i)] =
          quant_rate_requirement(spec, i);
  }

  OverheadReport rep =
      overhead(graph, qrates, s.blocks, s.block_length, s.rates);

  CsvWriter csv;
  csv.header({"kind", "i", "j", "value"});
  auto row = [&](const char* kind, int i, int j, double v) {
    csv.field(kind).field(i).field(j).field(v);
    csv.end_row();
  };
  for (int i = 0; i < m.num_nodes; ++i)
    for (int j = 0; j < m.num_nodes; ++j) {
      if (i == j) continue;
      row("capacity", i + 1, j + 1, graph.c(i, j));
      auto wp = widest_path(graph, i, j);
      row("widest", i + 1, j + 1, wp.rate);
      row("hops", i + 1, j + 1, wp.hops);
    }
  for (int k = 0; k < m.num_nodes; ++k) {
    row("quant_rate", k + 1, 0, qrates[static_cast<std::size_t>(k)]);
    row("flood_rate", k + 1, 0, rep.flood_rate[static_cast<std::size_t>(k)]);
  }
  row("n_prime", 0, 0, rep.n_prime);
  row("extra_blocks", 0, 0, static_cast<double>(rep.extra_blocks));
  row("efficiency", 0, 0, rep.efficiency);
  for (std::size_t k = 0; k < rep.true_rates.size(); ++k)
    row("true_rate", static_cast<int>(k) + 1, 0, rep.true_rates[k]);
  return csv.str();
}

}  // namespace nnc
