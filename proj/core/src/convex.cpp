#include "orbitcone/convex.hpp"

#include <algorithm>
#include <map>

namespace orbitcone {

bool zero_certificate_valid(const RootSystem& rs, const Weight& lambda, const ZeroCertificate& c) {
  if (c.points.empty() || c.points.size() != c.coefficients.size()) return false;
  Rat total = 0;
  Vec sum = zero_vec(c.points[0].size());
  for (size_t i = 0; i < c.points.size(); ++i) {
    if (c.coefficients[i] <= 0) return false;
    total += c.coefficients[i];
    sum = vec_add(sum, vec_scale(c.points[i], c.coefficients[i]));
  }
  if (total != 1 || !vec_is_zero(sum)) return false;
  auto [dom, word] = rs.dominant_representative(lambda);
  for (size_t i = 0; i < c.points.size(); ++i) {
    for (size_t j = i + 1; j < c.points.size(); ++j)
      if (c.points[i] == c.points[j]) return false;
    if (!(rs.dominant_representative(rs.weight_from_ambient(c.points[i])).first == dom))
      return false;
  }
  return true;
}

CaratheodoryResult caratheodory_reduce(const Vec& target, const std::vector<Vec>& points) {
  auto dec = point_in_conv(target, points);
  if (!dec.inside)
    throw PreconditionError("caratheodory_reduce: target is not in the convex hull");
  // A basic feasible solution of the phase-1 system already has support at
  // most rank(A) <= affine dimension + 1.
  CaratheodoryResult out;
  for (size_t j = 0; j < points.size(); ++j)
    if (dec.coefficients[j] > 0) {
      out.indices.push_back(j);
      out.coefficients.push_back(dec.coefficients[j]);
    }
  return out;
}

bool kostant_contains(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  if (!rs.is_dominant(lambda)) throw PreconditionError("kostant_contains: lambda must be dominant");
  // Route 1: exact LP on the orbit.
  auto orbit = rs.weyl_orbit(lambda);
  bool by_lp = point_in_conv(mu.ambient, orbit).inside;
  // Route 2: dominance criterion, lambda - dom(mu) in the nonnegative
  // rational span of the simple roots.
  Weight dom_mu = rs.dominant_representative(mu).first;
  Vec diff = vec_sub(lambda.ambient, dom_mu.ambient);
  bool by_dominance = true;
  // coefficient of alpha_i in diff is 2(diff|w_i)/(a_i|a_i); the difference
  // must also lie in the root span (no central component).
  Vec recon = zero_vec(rs.ambient_dim());
  for (int i = 0; i < rs.rank(); ++i) {
    Rat m = 2 * dot(diff, rs.fundamental_weights()[i]) /
            dot(rs.simple_roots()[i], rs.simple_roots()[i]);
    if (m < 0) by_dominance = false;
    recon = vec_add(recon, vec_scale(rs.simple_roots()[i], m));
  }
  if (recon != diff) by_dominance = false;
  if (by_lp != by_dominance)
    throw std::logic_error("kostant_contains: LP and dominance routes disagree");
  return by_lp;
}

std::vector<ExtremePoint> extreme_points_E(const RootSystem& rs, const Weight& lambda) {
  if (!rs.is_dominant(lambda)) throw PreconditionError("extreme_points_E: lambda must be dominant");
  std::vector<ExtremePoint> out;
  std::map<Vec, size_t> seen;
  const int n = rs.rank();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    auto ls = levi_subsystem(rs, subset);
    Vec nu = vec_sub(lambda.ambient, apply_matrix(ls.projector, lambda.ambient));
    if (seen.emplace(nu, out.size()).second)
      out.push_back({std::move(subset), rs.weight_from_ambient(nu)});
  }
  return out;
}

}  // namespace orbitcone
