#include "orbitcone/lp.hpp"

#include <cassert>

namespace orbitcone {

FeasibilityResult solve_nonneg_system(const Mat& rows, const Vec& b) {
  const size_t m = rows.size();
  if (m == 0 || m != b.size()) throw PreconditionError("solve_nonneg_system: bad shapes");
  const size_t n = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != n) throw PreconditionError("solve_nonneg_system: ragged matrix");

  // Tableau with one artificial per row; sign-normalize so rhs >= 0.
  // Columns: 0..n-1 original, n..n+m-1 artificial, last = rhs.
  std::vector<int> row_sign(m, 1);
  Mat t(m, Vec(n + m + 1, Rat(0)));
  for (size_t i = 0; i < m; ++i) {
    int s = b[i] < 0 ? -1 : 1;
    row_sign[i] = s;
    for (size_t j = 0; j < n; ++j) t[i][j] = rows[i][j] * s;
    t[i][n + i] = 1;
    t[i][n + m] = b[i] * s;
  }
  // Phase-1 objective: minimize sum of artificials. Reduced-cost row.
  Vec cost(n + m + 1, Rat(0));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j <= n + m; ++j) cost[j] -= t[i][j];
  for (size_t i = 0; i < m; ++i) cost[n + i] = 0;

  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) basis[i] = n + i;

  while (true) {
    // Bland: entering variable = lowest index with negative reduced cost.
    size_t enter = n + m;
    for (size_t j = 0; j < n + m; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == n + m) break;
    // Ratio test, ties by lowest basis index.
    size_t leave = m;
    Rat best;
    for (size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][n + m] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw PreconditionError("phase-1 simplex unbounded (internal error)");
    // Pivot.
    Rat piv = t[leave][enter];
    for (size_t j = 0; j <= n + m; ++j) t[leave][j] /= piv;
    for (size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
    }
    if (cost[enter] != 0) {
      Rat f = cost[enter];
      for (size_t j = 0; j <= n + m; ++j) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  FeasibilityResult out;
  Rat objective = -cost[n + m];  // sum of artificial values
  out.feasible = (objective == 0);
  if (out.feasible) {
    out.solution = Vec(n, Rat(0));
    for (size_t i = 0; i < m; ++i)
      if (basis[i] < n) out.solution[basis[i]] = t[i][n + m];
  } else {
    // y_i = (1 - reduced cost of artificial i) adjusted by the row sign.
    out.dual = Vec(m, Rat(0));
    for (size_t i = 0; i < m; ++i) out.dual[i] = (Rat(1) - cost[n + i]) * row_sign[i];
  }
  return out;
}

HullDecision zero_in_conv(const std::vector<Vec>& points) {
  if (points.empty()) throw PreconditionError("zero_in_conv: empty point list");
  const size_t d = points[0].size();
  for (const auto& p : points)
    if (p.size() != d) throw PreconditionError("zero_in_conv: dimension mismatch");
  const size_t n = points.size();
  Mat rows(d + 1, Vec(n));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < n; ++j) rows[i][j] = points[j][i];
  for (size_t j = 0; j < n; ++j) rows[d][j] = 1;
  Vec b = zero_vec(d + 1);
  b[d] = 1;

  auto res = solve_nonneg_system(rows, b);
  HullDecision out;
  out.inside = res.feasible;
  if (res.feasible) {
    out.coefficients = std::move(res.solution);
  } else {
    // y^T A_j <= 0 reads h.p_j >= y_last > 0 with h = -y_head.
    out.separator = Vec(d);
    for (size_t i = 0; i < d; ++i) out.separator[i] = -res.dual[i];
    for (const auto& p : points) assert(dot(out.separator, p) > 0);
  }
  return out;
}

HullDecision point_in_conv(const Vec& target, const std::vector<Vec>& points) {
  std::vector<Vec> shifted;
  shifted.reserve(points.size());
  for (const auto& p : points) {
    if (p.size() != target.size()) throw PreconditionError("point_in_conv: dimension mismatch");
    shifted.push_back(vec_sub(p, target));
  }
  return zero_in_conv(shifted);
}

bool zero_in_padded_cone(const std::vector<Vec>& required, const std::vector<Vec>& optional_pts) {
  if (required.empty()) return true;
  const size_t d = required[0].size();
  const size_t n = required.size() + optional_pts.size();
  // Substitute c_i = 1 + c'_i: solve sum c' p + sum d q = -sum(required).
  Mat rows(d, Vec(n));
  Vec b = zero_vec(d);
  size_t col = 0;
  for (const auto& p : required) {
    for (size_t i = 0; i < d; ++i) {
      rows[i][col] = p[i];
      b[i] -= p[i];
    }
    ++col;
  }
  for (const auto& q : optional_pts) {
    for (size_t i = 0; i < d; ++i) rows[i][col] = q[i];
    ++col;
  }
  return solve_nonneg_system(rows, b).feasible;
}

}  // namespace orbitcone
