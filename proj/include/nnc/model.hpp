#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "nnc/rng.hpp"

namespace nnc {

enum class Fading { None, Rayleigh };

// Geometry, path loss, per-node transmit powers and the fading law.
// Immutable once built; safe to share across threads.
struct NetworkModel {
  int num_nodes = 0;
  Eigen::MatrixXd distances;    // d(j,k) > 0 for j != k, diagonal unused
  double path_loss = 2.0;       // exponent alpha >= 0
  std::vector<double> powers;   // linear scale, >= 0
  Fading fading = Fading::None;

  void validate() const;  // throws std::invalid_argument on bad fields
};

// One realized set of complex link gains.  g(j,k) is the gain from node j
// into node k's receiver; the diagonal is meaningless and kept at zero.
struct GainMatrix {
  Eigen::MatrixXcd g;

  int nodes() const { return static_cast<int>(g.rows()); }
  std::complex<double> operator()(int j, int k) const { return g(j, k); }
};

// log2(1 + x) for x >= 0; throws on negative input.
double shannon_c(double x);

double db_to_linear(double db);
double linear_to_db(double x);

Eigen::MatrixXd distances_from_coordinates(
    const std::vector<std::array<double, 2>>& pts);

// Draws gains fresh for one channel state (slow fading: callers hold the
// result fixed for a whole rate evaluation).  Deterministic in (model, rng).
GainMatrix realize_gains(const NetworkModel& model, Rng rng);

// Allocation-free variant for hot Monte Carlo loops.
void realize_gains_into(const NetworkModel& model, Rng rng, GainMatrix& out);

}  // namespace nnc
