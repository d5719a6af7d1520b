#pragma once

#include <optional>
#include <vector>

#include "orbitcone/levi.hpp"
#include "orbitcone/lp.hpp"
#include "orbitcone/root_system.hpp"

namespace orbitcone {

// Witness for 0 in C_r: a convex combination of pairwise distinct Weyl orbit
// points equal to zero, with positive rational coefficients summing to 1.
struct ZeroCertificate {
  std::vector<Vec> points;
  std::vector<Rat> coefficients;

  size_t size() const { return points.size(); }
};

// Full validity check: positive coefficients summing to 1, weighted sum zero,
// points pairwise distinct and all in the Weyl orbit of lambda.
bool zero_certificate_valid(const RootSystem& rs, const Weight& lambda, const ZeroCertificate& c);

// Caratheodory reduction: a sub-list of at most (affine dimension + 1) points
// whose convex hull still contains the target. Pre: target in Conv(points).
struct CaratheodoryResult {
  std::vector<size_t> indices;
  Vec coefficients;  // aligned with indices, positive, sum 1
};
CaratheodoryResult caratheodory_reduce(const Vec& target, const std::vector<Vec>& points);

// Membership of mu in the Kostant polytope Conv(W lambda). Decided both by
// exact LP and by the dominance criterion; the two routes must agree.
bool kostant_contains(const RootSystem& rs, const Weight& lambda, const Weight& mu);

// Extreme points of t_+ intersected with Conv(W lambda): the central parts
// nu_{lambda,S} over all subsets S of simple roots, duplicates merged
// (first subset attaining each point is kept).
struct ExtremePoint {
  std::vector<int> subset;
  Weight point;
};
std::vector<ExtremePoint> extreme_points_E(const RootSystem& rs, const Weight& lambda);

// Smallest cardinality of a Weyl-orbit subset whose convex hull contains 0,
// searched exhaustively (up to stabilizer symmetry) for r = 2..r_max.
// Pre: lambda dominant and nonzero.
struct MinZeroResult {
  std::optional<int> r;
  std::optional<ZeroCertificate> certificate;
};
MinZeroResult min_zero_subset(const RootSystem& rs, const Weight& lambda, int r_max,
                              size_t orbit_cap = 1000000);

}  // namespace orbitcone
