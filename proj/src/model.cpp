#include "nnc/model.hpp"

#include <stdexcept>
#include <string>

namespace nnc {

void NetworkModel::validate() const {
  if (num_nodes < 2) throw std::invalid_argument("model: need at least 2 nodes");
  if (distances.rows() != num_nodes || distances.cols() != num_nodes)
    throw std::invalid_argument("model: distance matrix shape mismatch");
  if (path_loss < 0.0) throw std::invalid_argument("model: path loss must be >= 0");
  if (static_cast<int>(powers.size()) != num_nodes)
    throw std::invalid_argument("model: powers size mismatch");
  for (double p : powers)
    if (!(p >= 0.0)) throw std::invalid_argument("model: powers must be >= 0");
  for (int j = 0; j < num_nodes; ++j)
    for (int k = 0; k < num_nodes; ++k) {
      if (j == k) continue;
      if (!(distances(j, k) > 0.0))
        throw std::invalid_argument("model: d(" + std::to_string(j + 1) + "," +
                                    std::to_string(k + 1) + ") must be > 0");
    }
}

double shannon_c(double x) {
  if (x < 0.0) throw std::invalid_argument("shannon_c: negative argument");
  return std::log2(1.0 + x);
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double x) { return 10.0 * std::log10(x); }

Eigen::MatrixXd distances_from_coordinates(
    const std::vector<std::array<double, 2>>& pts) {
  const int n = static_cast<int>(pts.size());
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      d(i, j) = std::hypot(pts[i][0] - pts[j][0], pts[i][1] - pts[j][1]);
    }
  return d;
}

GainMatrix realize_gains(const NetworkModel& model, Rng rng) {
  GainMatrix out;
  realize_gains_into(model, rng, out);
  return out;
}

void realize_gains_into(const NetworkModel& model, Rng rng, GainMatrix& out) {
  const int n = model.num_nodes;
  if (out.g.rows() != n || out.g.cols() != n) out.g.setZero(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      if (j == k) {
        out.g(j, k) = 0.0;
        continue;
      }
      const double d = model.distances(j, k);
      if (!(d > 0.0))
        throw std::invalid_argument("realize_gains: nonpositive distance on link");
      const double att = std::pow(d, -0.5 * model.path_loss);
      if (model.fading == Fading::Rayleigh) {
        out.g(j, k) = rng.complex_gaussian() * att;
      } else {
        out.g(j, k) = att;
      }
    }
}

}  // namespace nnc
