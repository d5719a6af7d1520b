#include <algorithm>
#include <cstdint>
#include <map>

#include "orbitcone/convex.hpp"

namespace orbitcone {

namespace {

using I64 = long long;
using IVec = std::vector<I64>;

// Incremental fraction-free (Bareiss) echelon over the integers. Rows are
// reduced by all earlier rows on insertion; entries stay minors of the input
// matrix, so they fit in 64 bits for the coordinate scales arising from
// classical weight orbits.
struct Echelon {
  std::vector<IVec> rows;
  std::vector<size_t> pivot_col;
  std::vector<I64> pivots;  // pivots[k] = leading entry of rows[k]

  static I64 checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
      throw ResourceError("integer overflow in exact subset search");
    return static_cast<I64>(v);
  }

  // Reduce v by rows 0..k-1 (Bareiss forward substitution).
  IVec reduce(IVec v, size_t upto) const {
    for (size_t i = 0; i < upto; ++i) {
      I64 c = v[pivot_col[i]];
      I64 prev = i == 0 ? 1 : pivots[i - 1];
      for (size_t j = 0; j < v.size(); ++j) {
        __int128 t = static_cast<__int128>(pivots[i]) * v[j] -
                     static_cast<__int128>(c) * rows[i][j];
        v[j] = checked(t / prev);
      }
    }
    return v;
  }

  IVec reduce(IVec v) const { return reduce(std::move(v), rows.size()); }

  // Push an already-reduced nonzero row.
  void push(IVec v) {
    size_t col = 0;
    while (v[col] == 0) ++col;
    pivot_col.push_back(col);
    pivots.push_back(v[col]);
    rows.push_back(std::move(v));
  }

  void pop() {
    rows.pop_back();
    pivot_col.pop_back();
    pivots.pop_back();
  }
};

bool is_zero(const IVec& v) {
  return std::all_of(v.begin(), v.end(), [](I64 x) { return x == 0; });
}

bool parallel(const IVec& a, const IVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j) {
      __int128 c = static_cast<__int128>(a[i]) * b[j] - static_cast<__int128>(a[j]) * b[i];
      if (c != 0) return false;
    }
  return true;
}

struct Search {
  const std::vector<Vec>& orbit;        // rational ambient points, orbit[0] dominant
  std::vector<IVec> pts;                // integer-scaled copies
  size_t n, dim;
  int r = 0;                            // current target subset size
  Echelon ech;
  std::vector<IVec> target_stack;       // -pts[0] reduced per echelon level
  std::vector<size_t> chosen;
  std::optional<std::vector<size_t>> found;
  Vec found_coeffs;

  explicit Search(const std::vector<Vec>& orb) : orbit(orb), n(orb.size()), dim(orb[0].size()) {
    Int den = 1;
    for (const auto& p : orbit) {
      Int d = common_denominator(p);
      Int g;
      mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
      den = den / g * d;
    }
    pts.resize(n, IVec(dim));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < dim; ++j) {
        Rat v = orbit[i][j] * Rat(den);
        if (!is_integer(v) || !v.get_num().fits_slong_p())
          throw ResourceError("orbit coordinates out of integer range");
        pts[i][j] = v.get_num().get_si();
      }
  }

  IVec diff(size_t i) const {
    IVec d(dim);
    for (size_t j = 0; j < dim; ++j) d[j] = pts[i][j] - pts[0][j];
    return d;
  }

  // Accept the candidate set if 0 has a strictly positive convex combination.
  bool try_leaf(size_t cand) {
    std::vector<Vec> sel{orbit[0]};
    for (size_t i : chosen) sel.push_back(orbit[i]);
    sel.push_back(orbit[cand]);
    auto dec = zero_in_conv(sel);
    if (!dec.inside) return false;
    for (const auto& c : dec.coefficients)
      if (c <= 0) return false;
    found = chosen;
    found->insert(found->begin(), 0);
    found->push_back(cand);
    found_coeffs = dec.coefficients;
    return true;
  }

  // depth = chosen.size(); candidates have index > last chosen.
  bool dfs(size_t first_cand) {
    size_t depth = chosen.size();
    if (static_cast<int>(depth) == r - 2) {
      // Final slot: one more point must complete an affine combination of 0.
      const IVec& t = target_stack.back();
      if (is_zero(t)) return false;  // would need a zero coefficient
      for (size_t cand = first_cand; cand < n; ++cand) {
        IVec v = ech.reduce(diff(cand));
        if (is_zero(v) || !parallel(v, t)) continue;
        if (try_leaf(cand)) return true;
      }
      return false;
    }
    size_t needed = r - 2 - depth;  // further interior slots before the scan
    for (size_t next = first_cand; next + needed < n; ++next) {
      IVec v = ech.reduce(diff(next));
      if (is_zero(v)) continue;  // keep the chosen set affinely independent
      // Optional cone-based prune once the remaining pool is small.
      if (n - next <= 40) {
        std::vector<Vec> req{orbit[0]};
        for (size_t i : chosen) req.push_back(orbit[i]);
        req.push_back(orbit[next]);
        std::vector<Vec> rest(orbit.begin() + next + 1, orbit.end());
        if (!zero_in_padded_cone(req, rest)) continue;
      }
      chosen.push_back(next);
      ech.push(v);
      {
        // reduce the running target by just the new row
        IVec t = target_stack.back();
        size_t k = ech.rows.size() - 1;
        I64 c = t[ech.pivot_col[k]];
        I64 prev = k == 0 ? 1 : ech.pivots[k - 1];
        for (size_t j = 0; j < t.size(); ++j) {
          __int128 x = static_cast<__int128>(ech.pivots[k]) * t[j] -
                       static_cast<__int128>(c) * ech.rows[k][j];
          t[j] = Echelon::checked(x / prev);
        }
        target_stack.push_back(std::move(t));
      }
      bool ok = dfs(next + 1);
      target_stack.pop_back();
      ech.pop();
      chosen.pop_back();
      if (ok) return true;
    }
    return false;
  }
};

// Stabilizer of the dominant base point is generated by the simple
// reflections fixing it; minima of its orbits are the only candidates
// needed for the first non-base point.
std::vector<size_t> stabilizer_orbit_minima(const RootSystem& rs, const Weight& dom,
                                            const std::vector<Vec>& orbit) {
  std::vector<int> gens;
  for (int i = 0; i < rs.rank(); ++i)
    if (dom.fund[i] == 0) gens.push_back(i);
  std::map<Vec, size_t> index;
  for (size_t i = 0; i < orbit.size(); ++i) index[orbit[i]] = i;
  std::vector<char> seen(orbit.size(), 0);
  std::vector<size_t> minima;
  for (size_t i = 1; i < orbit.size(); ++i) {
    if (seen[i]) continue;
    // BFS the stabilizer orbit of point i; i is its minimum since indices
    // are visited in increasing order.
    std::vector<size_t> stack{i};
    seen[i] = 1;
    while (!stack.empty()) {
      size_t v = stack.back();
      stack.pop_back();
      for (int g : gens) {
        size_t u = index.at(rs.simple_reflect(g, orbit[v]));
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    minima.push_back(i);
  }
  return minima;
}

}  // namespace

MinZeroResult min_zero_subset(const RootSystem& rs, const Weight& lambda, int r_max,
                              size_t orbit_cap) {
  if (r_max < 2) throw PreconditionError("min_zero_subset: r_max must be >= 2");
  if (vec_is_zero(lambda.ambient))
    throw PreconditionError("min_zero_subset: lambda must be nonzero");
  Weight dom = rs.dominant_representative(lambda).first;
  auto orbit = rs.weyl_orbit(dom, orbit_cap);

  // r = 2: an antipodal pair exists iff the orbit contains -lambda.
  Vec neg = vec_neg(dom.ambient);
  if (std::find(orbit.begin(), orbit.end(), neg) != orbit.end()) {
    ZeroCertificate cert{{dom.ambient, neg}, {Rat(1, 2), Rat(1, 2)}};
    return {2, std::move(cert)};
  }

  auto minima = stabilizer_orbit_minima(rs, dom, orbit);
  Search search(orbit);
  IVec base_target(search.dim);
  for (size_t j = 0; j < search.dim; ++j) base_target[j] = -search.pts[0][j];

  for (int r = 3; r <= r_max; ++r) {
    search.r = r;
    search.target_stack = {base_target};
    for (size_t i2 : minima) {
      IVec v = search.diff(i2);
      if (is_zero(v)) continue;
      search.chosen.push_back(i2);
      search.ech.push(std::move(v));
      {
        IVec t = base_target;
        I64 c = t[search.ech.pivot_col[0]];
        for (size_t j = 0; j < t.size(); ++j) {
          __int128 x = static_cast<__int128>(search.ech.pivots[0]) * t[j] -
                       static_cast<__int128>(c) * search.ech.rows[0][j];
          t[j] = Echelon::checked(x);
        }
        search.target_stack.push_back(std::move(t));
      }
      bool ok = search.dfs(i2 + 1);
      search.target_stack.pop_back();
      search.ech.pop();
      search.chosen.pop_back();
      if (ok) {
        ZeroCertificate cert;
        for (size_t idx : *search.found) cert.points.push_back(orbit[idx]);
        cert.coefficients = search.found_coeffs;
        return {r, std::move(cert)};
      }
    }
  }
  return {std::nullopt, std::nullopt};
}

}  // namespace orbitcone
