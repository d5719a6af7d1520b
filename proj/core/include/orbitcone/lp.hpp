#pragma once

#include <optional>
#include <vector>

#include "orbitcone/numeric.hpp"

namespace orbitcone {

// Exact phase-1 simplex for systems A x = b, x >= 0 (A given as rows).
// Bland's rule throughout; no floating point.
struct FeasibilityResult {
  bool feasible = false;
  Vec solution;  // size n, a basic feasible point (support <= rank(A))
  Vec dual;      // size m; if infeasible, y with y^T A <= 0 and y^T b > 0
};

FeasibilityResult solve_nonneg_system(const Mat& rows, const Vec& b);

// Decision for 0 in Conv(points), with an exact certificate either way:
// convex coefficients when inside, a separating functional h (h.p > 0 for
// every point) when outside.
struct HullDecision {
  bool inside = false;
  Vec coefficients;
  Vec separator;
};

HullDecision zero_in_conv(const std::vector<Vec>& points);
HullDecision point_in_conv(const Vec& target, const std::vector<Vec>& points);

// Feasibility of  sum_{i in required} c_i p_i + sum_{j in optional} d_j q_j = 0
// with c_i >= 1, d_j >= 0. Used to prune subset searches.
bool zero_in_padded_cone(const std::vector<Vec>& required, const std::vector<Vec>& optional_pts);

}  // namespace orbitcone
