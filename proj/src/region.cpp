#include "nnc/region.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nnc {

namespace {

std::vector<std::array<double, 2>> pareto_filter(
    std::vector<std::array<double, 2>> pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a[0] != b[0] ? a[0] < b[0] : a[1] > b[1];
  });
  std::vector<std::array<double, 2>> keep;
  // scan right to left keeping the running y maximum
  double ymax = -1.0;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    if ((*it)[1] > ymax + 1e-15) {
      keep.push_back(*it);
      ymax = (*it)[1];
    }
  }
  std::reverse(keep.begin(), keep.end());
  return keep;
}

double cross(const std::array<double, 2>& o, const std::array<double, 2>& a,
             const std::array<double, 2>& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace

RateRegion region_from_bounds(double a, double b, double c) {
  if (a < 0 || b < 0 || c < 0)
    throw std::invalid_argument("region_from_bounds: bounds must be >= 0");
  RateRegion r;
  r.constraints = LinearBounds{a, b, c};
  if (c >= a + b) {
    r.frontier = {{a, b}};
    return r;
  }
  double x1 = std::max(0.0, c - b), y1 = std::min(b, c);
  double x2 = std::min(a, c), y2 = std::max(0.0, c - a);
  if (std::abs(x1 - x2) < 1e-15 && std::abs(y1 - y2) < 1e-15)
    r.frontier = {{x1, y1}};
  else
    r.frontier = {{x1, y1}, {x2, y2}};
  return r;
}

RateRegion union_and_hull(const std::vector<RateRegion>& regions, bool hull) {
  if (regions.empty())
    throw std::invalid_argument("union_and_hull: empty region list");
  std::vector<std::array<double, 2>> pts;
  double xmax = 0, ymax = 0;
  for (const auto& r : regions)
    for (const auto& p : r.frontier) {
      pts.push_back(p);
      xmax = std::max(xmax, p[0]);
      ymax = std::max(ymax, p[1]);
    }
  RateRegion out;
  if (!hull) {
    out.frontier = pareto_filter(std::move(pts));
    return out;
  }
  // Upper concave envelope (Andrew chain) over the corners plus the axis
  // anchors that time sharing with silence provides.
  pts.push_back({0.0, ymax});
  pts.push_back({xmax, 0.0});
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
  });
  std::vector<std::array<double, 2>> chain;
  for (const auto& p : pts) {
    while (chain.size() >= 2 &&
           cross(chain[chain.size() - 2], chain.back(), p) >= -1e-15)
      chain.pop_back();
    chain.push_back(p);
  }
  out.frontier = pareto_filter(std::move(chain));
  return out;
}

bool corner_dominates(const RateRegion& r, double x, double y, double tol) {
  for (const auto& p : r.frontier)
    if (p[0] >= x - tol && p[1] >= y - tol) return true;
  return false;
}

bool polyline_dominates(const RateRegion& r, double x, double y, double tol) {
  if (r.frontier.empty()) return false;
  if (corner_dominates(r, x, y, tol)) return true;
  for (std::size_t i = 0; i + 1 < r.frontier.size(); ++i) {
    const auto& a = r.frontier[i];
    const auto& b = r.frontier[i + 1];
    if (x < a[0] - tol || x > b[0] + tol) continue;
    double t = b[0] == a[0] ? 0.0 : (x - a[0]) / (b[0] - a[0]);
    double yi = a[1] + t * (b[1] - a[1]);
    if (yi >= y - tol) return true;
  }
  // left of the first corner: the frontier extends at the max height
  return x <= r.frontier.front()[0] + tol &&
         r.frontier.front()[1] >= y - tol;
}

double weighted_support(ChannelKind k, const RateOutcome& o, double w) {
  if (rate_components(k) == 1) return o.rates[0];
  double a = o.rates[0], b = o.rates[1];
  double c = o.rates.size() >= 3 ? o.rates[2] : a + b;
  if (w < 0.0) return std::min(c, a + b);
  auto p = support_corner(o, w);
  return w * p[0] + (1.0 - w) * p[1];
}

std::array<double, 2> support_corner(const RateOutcome& o, double w) {
  double a = o.rates[0], b = o.rates[1];
  double c = o.rates.size() >= 3 ? o.rates[2] : a + b;
  double x1 = std::min(a, c), y1 = std::min(b, std::max(0.0, c - x1));
  double y2 = std::min(b, c), x2 = std::min(a, std::max(0.0, c - y2));
  if (w < 0.0) w = 0.5;
  double v1 = w * x1 + (1.0 - w) * y1;
  double v2 = w * x2 + (1.0 - w) * y2;
  return v1 >= v2 ? std::array<double, 2>{x1, y1}
                  : std::array<double, 2>{x2, y2};
}

std::vector<double> default_weight_grid(int n) {
  std::vector<double> w;
  w.reserve(static_cast<std::size_t>(n));
  const double k = 3.0;
  for (int i = 0; i < n; ++i) {
    double t = static_cast<double>(i) / (n - 1);
    w.push_back(0.5 * (1.0 + std::tanh(k * (2.0 * t - 1.0)) / std::tanh(k)));
  }
  w.front() = 0.0;
  w.back() = 1.0;
  return w;
}

RateRegion sweep_region(ChannelKind kind, const GainMatrix& g,
                        const std::vector<double>& powers, Strategy s,
                        const std::vector<double>& weights) {
  if (rate_components(kind) < 2)
    throw std::invalid_argument("sweep_region: needs a two-user channel");
  std::vector<std::array<double, 2>> pts(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    auto opt = optimize_rate(kind, s, g, powers, weights[i]);
    auto outcome = evaluate(s, kind, g, powers, opt.params);
    pts[i] = support_corner(outcome, weights[i]);
  }
  RateRegion out;
  out.frontier = pareto_filter(std::move(pts));
  return out;
}

}  // namespace nnc
