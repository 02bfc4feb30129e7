#pragma once

#include <complex>
#include <cstdint>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "nnc/model.hpp"

namespace nnc {

// Jointly Gaussian view of a network.  Inputs are linear combinations of
// i.i.d. unit-variance complex factors, outputs are
//   Y_k = sum_{j != k} g(j,k) X_j + Z_k      (unit noise)
// and a node with a declared quantizer additionally exposes
//   Q_k = Y_k + Zq_k,  Zq_k ~ CN(0, var_k).
// Factors are addressable symbols so that superposition-coded inputs can be
// conditioned on their shared components.
enum class SymKind : std::uint8_t { Input, Output, Quantized, Factor };

struct Symbol {
  SymKind kind;
  int id;
  friend bool operator==(const Symbol& a, const Symbol& b) {
    return a.kind == b.kind && a.id == b.id;
  }
  friend bool operator<(const Symbol& a, const Symbol& b) {
    return a.kind != b.kind ? a.kind < b.kind : a.id < b.id;
  }
};

namespace sym {
inline Symbol x(int node) { return {SymKind::Input, node}; }
inline Symbol y(int node) { return {SymKind::Output, node}; }
inline Symbol q(int node) { return {SymKind::Quantized, node}; }
inline Symbol f(int factor) { return {SymKind::Factor, factor}; }
std::vector<Symbol> xs(const std::set<int>& nodes);
}  // namespace sym

class GaussSpec {
 public:
  explicit GaussSpec(Eigen::MatrixXcd gains);

  // Independent CN(0, P_k) inputs.
  static GaussSpec independent(const GainMatrix& g,
                               const std::vector<double>& powers);

  int nodes() const { return static_cast<int>(gains_.rows()); }
  int factors() const { return static_cast<int>(loading_.cols()); }
  const Eigen::MatrixXcd& gains() const { return gains_; }

  // X_node gets a private unit factor scaled by sqrt(power).
  void set_independent_input(int node, double power);

  int add_factor();
  void add_loading(int node, int factor, std::complex<double> w);

  // Correlated-input group: node i rides the shared factor with weight
  // coef_i*sqrt(p_i) plus a private remainder, so E|X_i|^2 = p_i and
  // E[X_i X_j^*] = coef_i coef_j^* sqrt(p_i p_j).  Returns the shared
  // factor's id.
  int add_correlated_group(const std::vector<int>& group,
                           const std::vector<double>& powers,
                           const std::vector<std::complex<double>>& coef);

  void set_quantizer(int node, double var);  // var > 0
  bool has_quantizer(int node) const;
  double quantizer_var(int node) const;
  double input_power(int node) const;

  Eigen::MatrixXcd joint_covariance(const std::vector<Symbol>& v) const;

 private:
  std::complex<double> cov(const Symbol& a, const Symbol& b) const;
  void refresh() const;

  Eigen::MatrixXcd gains_;
  Eigen::MatrixXcd loading_;      // nodes x factors
  std::vector<double> quant_var_; // <= 0 means undeclared

  // derived second moments, rebuilt lazily
  mutable bool dirty_ = true;
  mutable Eigen::MatrixXcd xx_, xy_, yy_;
};

// Conditional mutual information I(A;B|C) in bits for the jointly Gaussian
// vector defined by the spec.  Computed from Schur-complement conditional
// covariances; eigenvalues are floored at 1e-12 before the log-dets so exact
// rank deficiencies (conditioning on a deterministic function, zero-power
// inputs) cancel between the terms.  The time-sharing variable of the
// underlying coding theorems is a constant here; time sharing is realized
// geometrically by the region layer.
double mutual_info(const GaussSpec& spec, const std::vector<Symbol>& a,
                   const std::vector<Symbol>& b,
                   const std::vector<Symbol>& c = {});

struct SubsetBound {
  std::set<int> subset;   // S
  int decode_at = -1;     // k
  std::set<int> context;  // L
  double value = 0.0;
  enum class Class { One, Two } cls = Class::Two;
};

// Rate bound on the message sum of S when node k jointly tests the inputs
// of L together with the quantized observations of L \ S and its own
// channel output:
//   I(X_S; Q_{L\S} Y_k | X_{L\S}) - I(Q_S; Y_S | X_L Q_{L\S} Y_k)
// with Q terms present only for nodes that declared quantizers.  `required`
// is the set of nodes whose messages k must decode; it only tags the class
// (Class Two iff S is disjoint from it).
SubsetBound subset_bound(const GaussSpec& spec, const std::set<int>& S, int k,
                         const std::set<int>& L,
                         const std::set<int>& required = {});

// I(Q_k; Y_k | X_k): the index rate a quantizing node must convey.
double quant_rate_requirement(const GaussSpec& spec, int node);

// min over cuts separating source from sink of I(X_S; Y_{S^c} | X_{S^c})
// with transmitter cooperation on the cut.  Exact for single-sender and
// single-receiver cuts; larger cuts search over input correlations, which
// is plenty for the sanity-bound role this plays.
double cutset_upper_bound(const GaussSpec& spec, int source, int sink);

}  // namespace nnc
