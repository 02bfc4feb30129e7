#pragma once

#include <vector>

#include <Eigen/Dense>

#include "nnc/gauss_info.hpp"

namespace nnc {

// Link labels for the multihop initialization layer.
struct CapacityGraph {
  Eigen::MatrixXd c;  // c(i,j) >= 0, diagonal zero
  int nodes() const { return static_cast<int>(c.rows()); }
};

// Interference-free point-to-point link capacities C(|g_ij|^2 P_i).
CapacityGraph link_capacities(const GaussSpec&);

struct WidestPath {
  double rate = 0.0;          // max over paths of the bottleneck capacity
  int hops = 0;               // of the best path (fewest hops on ties)
  std::vector<int> path;      // node sequence, empty if disconnected
};

WidestPath widest_path(const CapacityGraph&, int from, int to);

struct OverheadReport {
  double n_prime = 0.0;            // extra-block length
  long extra_blocks = 0;           // K(K-1)
  double efficiency = 1.0;         // nB / (nB + K(K-1) n')
  std::vector<double> quant_rates;
  std::vector<double> flood_rate;  // min_j widest rate from each node
  std::vector<double> true_rates;  // efficiency * nominal (when given)
};

// Multihop-initialization cost: each node floods its last quantization
// index at its worst-case widest-path rate.  Throws when a node with a
// positive quantization rate cannot reach some other node.
OverheadReport overhead(const CapacityGraph&,
                        const std::vector<double>& quant_rates, double blocks,
                        double block_length,
                        const std::vector<double>& nominal_rates = {});

}  // namespace nnc
