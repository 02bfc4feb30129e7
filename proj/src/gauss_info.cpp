#include "nnc/gauss_info.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nnc {

namespace sym {
std::vector<Symbol> xs(const std::set<int>& nodes) {
  std::vector<Symbol> v;
  v.reserve(nodes.size());
  for (int n : nodes) v.push_back(x(n));
  return v;
}
}  // namespace sym

namespace {

constexpr double kEigFloor = 1e-12;

using Mat = Eigen::MatrixXcd;

double log2det_floored(const Mat& m) {
  if (m.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    s += std::log2(std::max(es.eigenvalues()(i), kEigFloor));
  return s;
}

// Pseudo-inverse of a Hermitian PSD matrix; directions with eigenvalue
// below the floor are treated as exactly deterministic.
Mat pinv_psd(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m);
  Eigen::VectorXd inv(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    double ev = es.eigenvalues()(i);
    inv(i) = ev > kEigFloor ? 1.0 / ev : 0.0;
  }
  return es.eigenvectors() * inv.asDiagonal() *
         es.eigenvectors().adjoint();
}

void check_disjoint(const std::vector<Symbol>& a, const std::vector<Symbol>& b,
                    const char* what) {
  for (const auto& s : a)
    for (const auto& t : b)
      if (s == t) throw std::invalid_argument(std::string("mutual_info: ") + what);
}

}  // namespace

GaussSpec::GaussSpec(Eigen::MatrixXcd gains)
    : gains_(std::move(gains)),
      loading_(Eigen::MatrixXcd::Zero(gains_.rows(), 0)),
      quant_var_(static_cast<std::size_t>(gains_.rows()), 0.0) {
  if (gains_.rows() != gains_.cols())
    throw std::invalid_argument("GaussSpec: gain matrix must be square");
}

GaussSpec GaussSpec::independent(const GainMatrix& g,
                                 const std::vector<double>& powers) {
  GaussSpec s(g.g);
  if (static_cast<int>(powers.size()) != s.nodes())
    throw std::invalid_argument("GaussSpec: powers size mismatch");
  for (int k = 0; k < s.nodes(); ++k)
    if (powers[k] > 0.0) s.set_independent_input(k, powers[k]);
  return s;
}

void GaussSpec::set_independent_input(int node, double power) {
  if (power < 0.0) throw std::invalid_argument("GaussSpec: negative power");
  int f = add_factor();
  add_loading(node, f, std::sqrt(power));
}

int GaussSpec::add_factor() {
  loading_.conservativeResize(Eigen::NoChange, loading_.cols() + 1);
  loading_.col(loading_.cols() - 1).setZero();
  dirty_ = true;
  return static_cast<int>(loading_.cols()) - 1;
}

void GaussSpec::add_loading(int node, int factor, std::complex<double> w) {
  loading_(node, factor) += w;
  dirty_ = true;
}

int GaussSpec::add_correlated_group(
    const std::vector<int>& group, const std::vector<double>& powers,
    const std::vector<std::complex<double>>& coef) {
  if (group.size() != powers.size() || group.size() != coef.size())
    throw std::invalid_argument("correlated group: size mismatch");
  int shared = add_factor();
  for (std::size_t i = 0; i < group.size(); ++i) {
    double mag2 = std::norm(coef[i]);
    if (mag2 > 1.0 + 1e-12)
      throw std::invalid_argument("correlated group: |coef| must be <= 1");
    add_loading(group[i], shared, coef[i] * std::sqrt(powers[i]));
    double rem = powers[i] * std::max(0.0, 1.0 - mag2);
    if (rem > 0.0) set_independent_input(group[i], rem);
  }
  return shared;
}

void GaussSpec::set_quantizer(int node, double var) {
  if (!(var > 0.0)) throw std::invalid_argument("quantizer variance must be > 0");
  quant_var_[static_cast<std::size_t>(node)] = var;
  dirty_ = true;
}

bool GaussSpec::has_quantizer(int node) const {
  return quant_var_[static_cast<std::size_t>(node)] > 0.0;
}

double GaussSpec::quantizer_var(int node) const {
  if (!has_quantizer(node))
    throw std::invalid_argument("quantizer not declared for node " +
                                std::to_string(node + 1));
  return quant_var_[static_cast<std::size_t>(node)];
}

double GaussSpec::input_power(int node) const {
  return loading_.row(node).squaredNorm();
}

void GaussSpec::refresh() const {
  if (!dirty_) return;
  const int n = nodes();
  Mat chan = Mat::Zero(n, n);  // chan(k,j): X_j's coefficient in Y_k
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      if (j != k) chan(k, j) = gains_(j, k);
  Mat b = chan * loading_;  // Y = b F + Z
  xx_ = loading_ * loading_.adjoint();
  xy_ = loading_ * b.adjoint();
  yy_ = b * b.adjoint();
  dirty_ = false;
}

std::complex<double> GaussSpec::cov(const Symbol& a, const Symbol& b) const {
  using K = SymKind;
  // Normalize order so only the upper triangle of kind pairs is handled.
  if (static_cast<int>(a.kind) > static_cast<int>(b.kind))
    return std::conj(cov(b, a));
  const int i = a.id, j = b.id;
  switch (a.kind) {
    case K::Input:
      if (b.kind == K::Input) return xx_(i, j);
      if (b.kind == K::Factor) return loading_(i, j);
      return xy_(i, j);  // Output or Quantized
    case K::Output:
    case K::Quantized: {
      if (b.kind == K::Factor) {
        // E[Y_i F_j^*] = row of (chan * loading); recover from xy_ is not
        // direct, so compute via gains row.
        std::complex<double> s = 0.0;
        for (int m = 0; m < nodes(); ++m)
          if (m != i) s += gains_(m, i) * loading_(m, j);
        return s;
      }
      std::complex<double> v = yy_(i, j);
      if (i == j) {
        v += 1.0;  // channel noise
        if (a.kind == K::Quantized && b.kind == K::Quantized)
          v += quantizer_var(i);
      }
      return v;
    }
    case K::Factor:
      return i == j ? 1.0 : 0.0;
  }
  return 0.0;
}

Eigen::MatrixXcd GaussSpec::joint_covariance(
    const std::vector<Symbol>& v) const {
  refresh();
  for (const auto& s : v) {
    if (s.kind == SymKind::Factor) {
      if (s.id < 0 || s.id >= factors())
        throw std::invalid_argument("joint_covariance: unknown factor");
    } else if (s.id < 0 || s.id >= nodes()) {
      throw std::invalid_argument("joint_covariance: node out of range");
    }
    if (s.kind == SymKind::Quantized) quantizer_var(s.id);  // must be declared
  }
  const int n = static_cast<int>(v.size());
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      m(i, j) = cov(v[i], v[j]);
      m(j, i) = std::conj(m(i, j));
    }
  return m;
}

double mutual_info(const GaussSpec& spec, const std::vector<Symbol>& a,
                   const std::vector<Symbol>& b,
                   const std::vector<Symbol>& c) {
  if (a.empty() || b.empty()) return 0.0;
  check_disjoint(a, b, "A and B must be disjoint");
  check_disjoint(a, c, "A and C must be disjoint");
  check_disjoint(b, c, "B and C must be disjoint");

  std::vector<Symbol> all = c;
  all.insert(all.end(), a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  Mat s = spec.joint_covariance(all);

  const int nc = static_cast<int>(c.size());
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  Mat cond;
  if (nc == 0) {
    cond = s;
  } else {
    Mat scc = s.topLeftCorner(nc, nc);
    Mat sxc = s.bottomLeftCorner(na + nb, nc);
    cond = s.bottomRightCorner(na + nb, na + nb) -
           sxc * pinv_psd(scc) * sxc.adjoint();
  }
  double ld_a = log2det_floored(cond.topLeftCorner(na, na));
  double ld_b = log2det_floored(cond.bottomRightCorner(nb, nb));
  double ld_ab = log2det_floored(cond);
  return std::max(0.0, ld_a + ld_b - ld_ab);
}

SubsetBound subset_bound(const GaussSpec& spec, const std::set<int>& S, int k,
                         const std::set<int>& L,
                         const std::set<int>& required) {
  if (S.empty()) throw std::invalid_argument("subset_bound: S must be nonempty");
  if (S.count(k)) throw std::invalid_argument("subset_bound: k must not be in S");
  if (!L.count(k)) throw std::invalid_argument("subset_bound: k must be in L");
  for (int i : S)
    if (!L.count(i)) throw std::invalid_argument("subset_bound: S must be inside L");

  std::vector<Symbol> A, B, C;
  for (int i : S) A.push_back(sym::x(i));
  for (int i : L)
    if (!S.count(i)) {
      C.push_back(sym::x(i));
      if (spec.has_quantizer(i)) B.push_back(sym::q(i));
    }
  B.push_back(sym::y(k));
  double t1 = mutual_info(spec, A, B, C);

  std::vector<Symbol> A2, B2, C2;
  for (int i : S)
    if (spec.has_quantizer(i)) {
      A2.push_back(sym::q(i));
      B2.push_back(sym::y(i));
    }
  double t2 = 0.0;
  if (!A2.empty()) {
    for (int i : L) C2.push_back(sym::x(i));
    for (int i : L)
      if (!S.count(i) && spec.has_quantizer(i)) C2.push_back(sym::q(i));
    C2.push_back(sym::y(k));
    t2 = mutual_info(spec, A2, B2, C2);
  }

  SubsetBound out;
  out.subset = S;
  out.decode_at = k;
  out.context = L;
  out.value = t1 - t2;
  bool meets_required = false;
  for (int i : S)
    if (required.count(i)) meets_required = true;
  out.cls = meets_required ? SubsetBound::Class::One : SubsetBound::Class::Two;
  return out;
}

double quant_rate_requirement(const GaussSpec& spec, int node) {
  return mutual_info(spec, {sym::q(node)}, {sym::y(node)}, {sym::x(node)});
}

namespace {

// log2 det(I + A diag(sqrt p) R diag(sqrt p) A^H) for a unit-diagonal
// correlation matrix R.
double coop_rate(const Mat& a, const Eigen::VectorXd& p, const Mat& r) {
  Mat d = p.array().sqrt().matrix().asDiagonal();
  Mat k = d * r * d;
  Mat m = Mat::Identity(a.rows(), a.rows()) + a * k * a.adjoint();
  return log2det_floored(m);
}

bool psd_ok(const Mat& r) {
  Eigen::SelfAdjointEigenSolver<Mat> es(r, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0) >= -1e-9;
}

double best_coop_rate(const Mat& a, const Eigen::VectorXd& p) {
  const int ns = static_cast<int>(a.cols());
  const int nr = static_cast<int>(a.rows());
  if (ns == 1) return std::log2(1.0 + p(0) * a.col(0).squaredNorm());
  if (nr == 1) {
    // one receiver: fully aligned beamforming is exact
    double amp = 0.0;
    for (int s = 0; s < ns; ++s) amp += std::sqrt(p(s)) * std::abs(a(0, s));
    return std::log2(1.0 + amp * amp);
  }
  // Search over correlation matrices: start from identity and from rank-one
  // phase alignment toward each receiver, then sweep pairwise entries.
  double best = coop_rate(a, p, Mat::Identity(ns, ns));
  Mat rbest = Mat::Identity(ns, ns);
  for (int r = 0; r < nr; ++r) {
    Eigen::VectorXcd u(ns);
    for (int s = 0; s < ns; ++s) {
      std::complex<double> g = a(r, s);
      u(s) = std::abs(g) > 0 ? std::conj(g) / std::abs(g) : 1.0;
    }
    Mat cand = u * u.adjoint();
    double v = coop_rate(a, p, cand);
    if (v > best) { best = v; rbest = cand; }
  }
  for (int sweep = 0; sweep < 3; ++sweep) {
    for (int i = 0; i < ns; ++i)
      for (int j = i + 1; j < ns; ++j)
        for (int mi = 0; mi <= 8; ++mi)
          for (int ph = 0; ph < 16; ++ph) {
            double mag = mi / 8.0;
            double ang = 2.0 * std::numbers::pi * ph / 16.0;
            Mat cand = rbest;
            cand(i, j) = std::polar(mag, ang);
            cand(j, i) = std::conj(cand(i, j));
            if (!psd_ok(cand)) continue;
            double v = coop_rate(a, p, cand);
            if (v > best) { best = v; rbest = cand; }
          }
  }
  return best;
}

}  // namespace

double cutset_upper_bound(const GaussSpec& spec, int source, int sink) {
  const int n = spec.nodes();
  if (source == sink) throw std::invalid_argument("cutset: source == sink");
  std::vector<int> others;
  for (int i = 0; i < n; ++i)
    if (i != source && i != sink) others.push_back(i);
  const int m = static_cast<int>(others.size());
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> cut{source}, rest{sink};
    for (int i = 0; i < m; ++i)
      ((mask >> i) & 1u ? cut : rest).push_back(others[i]);
    // senders with zero power contribute nothing; drop them to keep the
    // search small
    std::vector<int> tx;
    for (int s : cut)
      if (spec.input_power(s) > 0.0) tx.push_back(s);
    if (tx.empty()) return 0.0;
    Mat a(static_cast<int>(rest.size()), static_cast<int>(tx.size()));
    Eigen::VectorXd p(static_cast<int>(tx.size()));
    for (std::size_t r = 0; r < rest.size(); ++r)
      for (std::size_t s = 0; s < tx.size(); ++s)
        a(static_cast<int>(r), static_cast<int>(s)) =
            spec.gains()(tx[s], rest[r]);
    for (std::size_t s = 0; s < tx.size(); ++s)
      p(static_cast<int>(s)) = spec.input_power(tx[s]);
    best = std::min(best, best_coop_rate(a, p));
  }
  return best;
}

}  // namespace nnc
