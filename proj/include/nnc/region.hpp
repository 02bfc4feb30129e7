#pragma once

#include <array>
#include <optional>
#include <vector>

#include "nnc/strategies.hpp"

namespace nnc {

struct LinearBounds {
  double r1 = 0, r2 = 0, rsum = 0;
};

// Two-user region stored as its Pareto corner points (R1 ascending, R2
// nonincreasing).  Regions are down-closed sets; the corner list is the
// sampled frontier.
struct RateRegion {
  std::vector<std::array<double, 2>> frontier;
  std::optional<LinearBounds> constraints;
};

// Pentagon {0 <= R1 <= a, 0 <= R2 <= b, R1+R2 <= c} (rectangle when the sum
// bound is slack), reduced to its Pareto corners.
RateRegion region_from_bounds(double a, double b, double c);

// Union of sampled frontiers; with hull=true the upper concave envelope
// (time sharing) including the axis anchor points.
RateRegion union_and_hull(const std::vector<RateRegion>& regions, bool hull);

// Is (x, y) dominated by some frontier corner (within tol)?
bool corner_dominates(const RateRegion& r, double x, double y, double tol);
// Is (x, y) under the frontier polyline (valid for convex regions)?
bool polyline_dominates(const RateRegion& r, double x, double y, double tol);

// Linear maximum of w*R1 + (1-w)*R2 over the outcome's bound polytope, and
// the corner achieving it.  weight < 0 asks for the best sum rate.
double weighted_support(ChannelKind, const RateOutcome&, double w);
std::array<double, 2> support_corner(const RateOutcome&, double w);

// 33 weights with geometric clustering near the axes.
std::vector<double> default_weight_grid(int n = 33);

// Scalarization sweep tracing a strategy's frontier; parameters are
// re-optimized per weight.
RateRegion sweep_region(ChannelKind, const GainMatrix&,
                        const std::vector<double>& powers, Strategy,
                        const std::vector<double>& weights);

}  // namespace nnc
