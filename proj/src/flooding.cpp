#include "nnc/flooding.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace nnc {

CapacityGraph link_capacities(const GaussSpec& spec) {
  const int n = spec.nodes();
  CapacityGraph g;
  g.c = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    double p = spec.input_power(i);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      g.c(i, j) = shannon_c(std::norm(spec.gains()(i, j)) * p);
    }
  }
  return g;
}

WidestPath widest_path(const CapacityGraph& g, int from, int to) {
  const int n = g.nodes();
  if (from == to) throw std::invalid_argument("widest_path: from == to");
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> width(static_cast<std::size_t>(n), 0.0);
  std::vector<int> hops(static_cast<std::size_t>(n), 0);
  std::vector<int> pred(static_cast<std::size_t>(n), -1);
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  width[static_cast<std::size_t>(from)] = inf;

  // max-min relaxation; ties prefer fewer hops, then lower node id, which
  // keeps the reported path deterministic
  for (int round = 0; round < n; ++round) {
    int u = -1;
    for (int i = 0; i < n; ++i) {
      if (done[static_cast<std::size_t>(i)] || width[static_cast<std::size_t>(i)] <= 0.0)
        continue;
      if (u < 0 || width[static_cast<std::size_t>(i)] > width[static_cast<std::size_t>(u)] ||
          (width[static_cast<std::size_t>(i)] == width[static_cast<std::size_t>(u)] &&
           hops[static_cast<std::size_t>(i)] < hops[static_cast<std::size_t>(u)]))
        u = i;
    }
    if (u < 0) break;
    done[static_cast<std::size_t>(u)] = true;
    if (u == to) break;
    for (int v = 0; v < n; ++v) {
      if (v == u || done[static_cast<std::size_t>(v)]) continue;
      double w = std::min(width[static_cast<std::size_t>(u)], g.c(u, v));
      int h = hops[static_cast<std::size_t>(u)] + 1;
      if (w > width[static_cast<std::size_t>(v)] ||
          (w == width[static_cast<std::size_t>(v)] && w > 0.0 &&
           h < hops[static_cast<std::size_t>(v)])) {
        width[static_cast<std::size_t>(v)] = w;
        hops[static_cast<std::size_t>(v)] = h;
        pred[static_cast<std::size_t>(v)] = u;
      }
    }
  }

  WidestPath out;
  double w = width[static_cast<std::size_t>(to)];
  if (!(w > 0.0) || std::isinf(w)) return out;  // disconnected
  out.rate = w;
  out.hops = hops[static_cast<std::size_t>(to)];
  for (int v = to; v != -1; v = pred[static_cast<std::size_t>(v)])
    out.path.push_back(v);
  std::reverse(out.path.begin(), out.path.end());
  return out;
}

OverheadReport overhead(const CapacityGraph& g,
                        const std::vector<double>& quant_rates, double blocks,
                        double block_length,
                        const std::vector<double>& nominal_rates) {
  const int n = g.nodes();
  if (static_cast<int>(quant_rates.size()) != n)
    throw std::invalid_argument("overhead: quant rate size mismatch");
  if (!(blocks > 0.0) || !(block_length > 0.0))
    throw std::invalid_argument("overhead: blocks and block length must be > 0");

  OverheadReport rep;
  rep.quant_rates = quant_rates;
  rep.extra_blocks = static_cast<long>(n) * (n - 1);
  rep.flood_rate.assign(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    double worst = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      if (j == k) continue;
      worst = std::min(worst, widest_path(g, k, j).rate);
    }
    rep.flood_rate[static_cast<std::size_t>(k)] = worst;
    if (quant_rates[static_cast<std::size_t>(k)] > 0.0 && !(worst > 0.0))
      throw std::runtime_error(
          "cannot initialize backward decoding: node " + std::to_string(k + 1) +
          " cannot flood its quantization index to every node");
    if (quant_rates[static_cast<std::size_t>(k)] > 0.0)
      rep.n_prime = std::max(
          rep.n_prime,
          block_length * quant_rates[static_cast<std::size_t>(k)] / worst);
  }
  rep.efficiency = block_length * blocks /
                   (block_length * blocks +
                    static_cast<double>(rep.extra_blocks) * rep.n_prime);
  if (!nominal_rates.empty()) {
    if (static_cast<int>(nominal_rates.size()) != n)
      throw std::invalid_argument("overhead: nominal rate size mismatch");
    rep.true_rates.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
      rep.true_rates[static_cast<std::size_t>(k)] =
          rep.efficiency * nominal_rates[static_cast<std::size_t>(k)];
  }
  return rep;
}

}  // namespace nnc
