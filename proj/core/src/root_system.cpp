#include "orbitcone/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace orbitcone {

char series_letter(Series s) {
  switch (s) {
    case Series::A: return 'A';
    case Series::B: return 'B';
    case Series::C: return 'C';
    case Series::D: return 'D';
  }
  return '?';
}

Series series_from_letter(char c) {
  switch (c) {
    case 'A': case 'a': return Series::A;
    case 'B': case 'b': return Series::B;
    case 'C': case 'c': return Series::C;
    case 'D': case 'd': return Series::D;
  }
  throw ConfigError(std::string("unsupported series letter '") + c + "'; expected A, B, C or D");
}

Int weyl_order_formula(Series s, int rank) {
  Int f = 1;
  for (int i = 2; i <= rank; ++i) f *= i;
  switch (s) {
    case Series::A: return f * (rank + 1);
    case Series::B:
    case Series::C: {
      Int p = 1;
      mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), rank);
      return f * p;
    }
    case Series::D: {
      Int p = 1;
      mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), rank - 1);
      return f * p;
    }
  }
  return 0;
}

std::string RootSystem::name() const {
  return std::string(1, series_letter(series_)) + std::to_string(rank());
}

RootSystem RootSystem::build(Series series, int rank) {
  auto bad = [&](int min) {
    if (rank < min)
      throw ConfigError(std::string(1, series_letter(series)) + std::to_string(rank) +
                        ": rank must be >= " + std::to_string(min));
  };
  RootSystem rs;
  rs.series_ = series;
  rs.standard_build_ = true;
  auto e = [&](size_t dim, size_t i) {
    Vec v = zero_vec(dim);
    v[i] = 1;
    return v;
  };
  switch (series) {
    case Series::A: {
      bad(1);
      size_t d = rank + 1;
      rs.ambient_dim_ = d;
      for (int i = 0; i < rank; ++i)
        rs.simple_roots_.push_back(vec_sub(e(d, i), e(d, i + 1)));
      break;
    }
    case Series::B: {
      bad(2);
      size_t d = rank;
      rs.ambient_dim_ = d;
      for (int i = 0; i + 1 < rank; ++i)
        rs.simple_roots_.push_back(vec_sub(e(d, i), e(d, i + 1)));
      rs.simple_roots_.push_back(e(d, rank - 1));
      break;
    }
    case Series::C: {
      bad(2);
      size_t d = rank;
      rs.ambient_dim_ = d;
      for (int i = 0; i + 1 < rank; ++i)
        rs.simple_roots_.push_back(vec_sub(e(d, i), e(d, i + 1)));
      rs.simple_roots_.push_back(vec_scale(e(d, rank - 1), Rat(2)));
      break;
    }
    case Series::D: {
      bad(3);
      size_t d = rank;
      rs.ambient_dim_ = d;
      for (int i = 0; i + 1 < rank; ++i)
        rs.simple_roots_.push_back(vec_sub(e(d, i), e(d, i + 1)));
      rs.simple_roots_.push_back(vec_add(e(d, rank - 2), e(d, rank - 1)));
      break;
    }
  }
  rs.weyl_order_ = weyl_order_formula(series, rank);
  rs.finish_construction();
  return rs;
}

namespace {

std::vector<std::vector<long>> cartan_from_roots(const std::vector<Vec>& roots) {
  const size_t n = roots.size();
  std::vector<std::vector<long>> c(n, std::vector<long>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Rat v = 2 * dot(roots[i], roots[j]) / dot(roots[j], roots[j]);
      if (!is_integer(v)) throw ConfigError("simple roots do not form a crystallographic system");
      c[i][j] = to_long(v);
    }
  return c;
}

}  // namespace

RootSystem RootSystem::from_simple_roots(std::vector<Vec> simple_roots) {
  if (simple_roots.empty()) throw ConfigError("empty simple root list");
  const size_t n = simple_roots.size();
  auto cart = cartan_from_roots(simple_roots);

  std::vector<std::vector<int>> adj(n);
  std::vector<int> deg(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j && cart[i][j] != 0) {
        adj[i].push_back(static_cast<int>(j));
        ++deg[i];
      }
  // connectivity check
  {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    size_t cnt = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adj[v])
        if (!seen[u]) {
          seen[u] = 1;
          ++cnt;
          stack.push_back(u);
        }
    }
    if (cnt != n) throw ConfigError("simple roots do not form a connected diagram");
  }

  Series series;
  std::vector<int> order;  // positions into simple_roots, Bourbaki order
  int fork = -1;
  for (size_t i = 0; i < n; ++i)
    if (deg[i] >= 3) fork = static_cast<int>(i);

  if (n == 1) {
    series = Series::A;
    order = {0};
  } else if (fork >= 0) {
    // Type D: a path ending in the fork node, plus two leaves on the fork.
    if (deg[fork] != 3 || n < 4)
      throw ConfigError("sub-diagram is not of classical type");
    std::vector<int> leaves;
    for (int u : adj[fork])
      if (deg[u] == 1) leaves.push_back(u);
    if (leaves.size() < 2) throw ConfigError("sub-diagram is not of classical type");
    // Keep the last two leaves as the branch nodes; walk the path to the fork.
    int l1 = leaves[leaves.size() - 2], l2 = leaves[leaves.size() - 1];
    std::vector<char> used(n, 0);
    used[l1] = used[l2] = 1;
    // find the path endpoint that is not a branch leaf
    int start = -1;
    for (size_t i = 0; i < n; ++i)
      if (!used[i] && deg[i] == 1) start = static_cast<int>(i);
    if (start < 0) start = fork;  // n == 4 with three leaves used? handled below
    int prev = -1, cur = start;
    while (true) {
      order.push_back(cur);
      used[cur] = 1;
      if (cur == fork) break;
      int next = -1;
      for (int u : adj[cur])
        if (u != prev && !used[u]) next = u;
      if (next < 0) throw ConfigError("sub-diagram is not of classical type");
      prev = cur;
      cur = next;
    }
    order.push_back(l1);
    order.push_back(l2);
    if (order.size() != n) throw ConfigError("sub-diagram is not of classical type");
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (i != j && cart[order[i]][order[j]] * cart[order[j]][order[i]] != 1 &&
            cart[order[i]][order[j]] != 0)
          throw ConfigError("sub-diagram is not of classical type");
    series = Series::D;
  } else {
    // A path; orient so that a double edge, if present, sits at the far end.
    std::vector<int> ends;
    for (size_t i = 0; i < n; ++i)
      if (deg[i] == 1) ends.push_back(static_cast<int>(i));
    if (ends.size() != 2) throw ConfigError("sub-diagram is not of classical type");
    auto walk = [&](int start) {
      std::vector<int> path;
      int prev = -1, cur = start;
      while (true) {
        path.push_back(cur);
        int next = -1;
        for (int u : adj[cur])
          if (u != prev) next = u;
        if (next < 0) break;
        prev = cur;
        cur = next;
      }
      return path;
    };
    order = walk(std::min(ends[0], ends[1]));
    int doubled = -1;  // index of the first node of the unique double edge
    for (size_t i = 0; i + 1 < n; ++i) {
      long p = cart[order[i]][order[i + 1]] * cart[order[i + 1]][order[i]];
      if (p == 2) {
        if (doubled >= 0) throw ConfigError("sub-diagram is not of classical type");
        doubled = static_cast<int>(i);
      } else if (p != 1) {
        throw ConfigError("sub-diagram is not of classical type");
      }
    }
    if (doubled < 0) {
      series = Series::A;
    } else if (doubled == 0 && n > 2) {
      std::reverse(order.begin(), order.end());
      doubled = static_cast<int>(n) - 2;
      series = cart[order[n - 2]][order[n - 1]] == -2 ? Series::B : Series::C;
    } else if (doubled == static_cast<int>(n) - 2) {
      if (n == 2 && cart[order[0]][order[1]] != -2)
        std::reverse(order.begin(), order.end());  // normalize rank 2 to B2
      series = cart[order[n - 2]][order[n - 1]] == -2 ? Series::B : Series::C;
    } else {
      throw ConfigError("sub-diagram is not of classical type");
    }
  }

  RootSystem rs;
  rs.series_ = series;
  rs.standard_build_ = false;
  rs.ambient_dim_ = simple_roots[0].size();
  for (int idx : order) rs.simple_roots_.push_back(simple_roots[idx]);
  rs.weyl_order_ = weyl_order_formula(series, static_cast<int>(n));
  rs.finish_construction();
  return rs;
}

void RootSystem::finish_construction() {
  const int n = rank();
  cartan_ = cartan_from_roots(simple_roots_);

  // Fundamental weights: solve <w_i, a_j^vee> = delta_ij inside span(a_1..a_n),
  // writing w_i = sum_k c_k a_k, i.e. C^T c = e_i.
  Mat ct(n, Vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ct[i][j] = Rat(cartan_[j][i]);
  for (int i = 0; i < n; ++i) {
    Vec e = zero_vec(n);
    e[i] = 1;
    Vec c = solve_linear(ct, e);
    Vec w = zero_vec(ambient_dim_);
    for (int k = 0; k < n; ++k) w = vec_add(w, vec_scale(simple_roots_[k], c[k]));
    fund_weights_.push_back(std::move(w));
  }
  fund_gram_.assign(n, Vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) fund_gram_[i][j] = dot(fund_weights_[i], fund_weights_[j]);

  // All roots by reflection closure of the simple roots, then the positive half.
  std::set<Vec> roots(simple_roots_.begin(), simple_roots_.end());
  std::vector<Vec> queue(simple_roots_.begin(), simple_roots_.end());
  while (!queue.empty()) {
    Vec r = queue.back();
    queue.pop_back();
    for (int i = 0; i < n; ++i) {
      Vec s = simple_reflect(i, r);
      if (roots.insert(s).second) queue.push_back(s);
    }
  }
  for (const auto& r : roots) {
    // coefficient of a_i in r is 2(r|w_i)/(a_i|a_i)
    bool positive = true;
    std::vector<long> fund(n);
    for (int i = 0; i < n; ++i) {
      Rat m = 2 * dot(r, fund_weights_[i]) / dot(simple_roots_[i], simple_roots_[i]);
      if (m < 0) positive = false;
      Rat pair = 2 * dot(r, simple_roots_[i]) / dot(simple_roots_[i], simple_roots_[i]);
      fund[i] = to_long(pair);
    }
    if (positive) {
      positive_roots_.push_back(r);
      positive_roots_fund_.push_back(std::move(fund));
    }
  }

  Vec rho = zero_vec(ambient_dim_);
  for (const auto& w : fund_weights_) rho = vec_add(rho, w);
  rho_ = weight_from_ambient(rho);
}

Weight RootSystem::weight_from_fund(Vec fund) const {
  if (fund.size() != static_cast<size_t>(rank()))
    throw PreconditionError("weight has " + std::to_string(fund.size()) +
                            " coordinates, expected " + std::to_string(rank()));
  Vec a = zero_vec(ambient_dim_);
  for (int i = 0; i < rank(); ++i) a = vec_add(a, vec_scale(fund_weights_[i], fund[i]));
  return Weight{std::move(fund), std::move(a)};
}

Weight RootSystem::weight_from_ambient(const Vec& ambient) const {
  if (ambient.size() != ambient_dim_)
    throw PreconditionError("ambient vector has wrong dimension");
  Vec fund(rank());
  for (int i = 0; i < rank(); ++i)
    fund[i] = 2 * dot(ambient, simple_roots_[i]) / dot(simple_roots_[i], simple_roots_[i]);
  return weight_from_fund(std::move(fund));
}

Weight RootSystem::zero_weight() const { return weight_from_fund(zero_vec(rank())); }

bool RootSystem::is_dominant(const Weight& w) const {
  for (const auto& c : w.fund)
    if (c < 0) return false;
  return true;
}

bool RootSystem::is_integral(const Weight& w) const {
  for (const auto& c : w.fund)
    if (!is_integer(c)) return false;
  return true;
}

Vec RootSystem::simple_reflect(int i, const Vec& x) const {
  const Vec& a = simple_roots_[i];
  Rat t = 2 * dot(x, a) / dot(a, a);
  return vec_sub(x, vec_scale(a, t));
}

Vec RootSystem::longest_element_action(const Vec& x) const {
  if (!standard_build_)
    throw PreconditionError("longest_element_action is only available on standard builds");
  Vec y(x.size());
  switch (series_) {
    case Series::A:
      for (size_t i = 0; i < x.size(); ++i) y[i] = -x[x.size() - 1 - i];
      break;
    case Series::B:
    case Series::C:
      y = vec_neg(x);
      break;
    case Series::D:
      y = vec_neg(x);
      if (rank() % 2 == 1) y.back() = x.back();
      break;
  }
  return y;
}

std::pair<Weight, std::vector<int>> RootSystem::dominant_representative(const Weight& w) const {
  Vec x = w.ambient;
  std::vector<int> word;
  while (true) {
    int neg = -1;
    for (int i = 0; i < rank(); ++i) {
      if (dot(x, simple_roots_[i]) < 0) {
        neg = i;
        break;
      }
    }
    if (neg < 0) break;
    x = simple_reflect(neg, x);
    word.push_back(neg);
  }
  return {weight_from_ambient(x), word};
}

std::vector<Vec> RootSystem::weyl_orbit(const Weight& w, size_t cap) const {
  auto [dom, word] = dominant_representative(w);
  std::set<Vec> orbit{dom.ambient};
  std::vector<Vec> queue{dom.ambient};
  while (!queue.empty()) {
    Vec x = queue.back();
    queue.pop_back();
    for (int i = 0; i < rank(); ++i) {
      Vec y = simple_reflect(i, x);
      if (orbit.insert(y).second) {
        if (orbit.size() > cap)
          throw ResourceError("Weyl orbit exceeds cap of " + std::to_string(cap) + " points");
        queue.push_back(y);
      }
    }
  }
  std::vector<Vec> out(orbit.begin(), orbit.end());
  std::sort(out.begin(), out.end(), [](const Vec& a, const Vec& b) { return b < a; });
  return out;
}

Weight RootSystem::dual_weight(const Weight& w) const {
  if (!is_dominant(w)) throw PreconditionError("dual_weight requires a dominant weight");
  return dominant_representative(weight_from_ambient(vec_neg(w.ambient))).first;
}

bool RootSystem::is_self_dual(const Weight& w) const { return dual_weight(w) == w; }

std::vector<std::vector<int>> connected_subdiagrams(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<std::vector<int>> out{{}};
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> nodes;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) nodes.push_back(i);
    // BFS connectivity within the induced sub-diagram
    std::vector<char> in(n, 0), seen(n, 0);
    for (int v : nodes) in[v] = 1;
    std::vector<int> stack{nodes[0]};
    seen[nodes[0]] = 1;
    size_t cnt = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u)
        if (in[u] && !seen[u] && rs.cartan()[v][u] != 0) {
          seen[u] = 1;
          ++cnt;
          stack.push_back(u);
        }
    }
    if (cnt == nodes.size()) out.push_back(std::move(nodes));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace orbitcone
