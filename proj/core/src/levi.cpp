#include "orbitcone/levi.hpp"

#include <algorithm>

namespace orbitcone {

Vec apply_matrix(const Mat& m, const Vec& v) {
  Vec out(m.size(), Rat(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

LeviSubsystem levi_subsystem(const RootSystem& rs, std::vector<int> selected) {
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
  for (int i : selected)
    if (i < 0 || i >= rs.rank())
      throw PreconditionError("levi_subsystem: node index out of range");

  LeviSubsystem ls;
  ls.selected = selected;
  const size_t dim = rs.ambient_dim();
  ls.projector.assign(dim, zero_vec(dim));
  if (selected.empty()) return ls;

  // Connected components of the induced sub-diagram.
  std::vector<char> seen(selected.size(), 0);
  for (size_t s = 0; s < selected.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{selected[s]};
    seen[s] = 1;
    for (size_t k = 0; k < comp.size(); ++k)
      for (size_t t = 0; t < selected.size(); ++t)
        if (!seen[t] && rs.cartan()[comp[k]][selected[t]] != 0) {
          seen[t] = 1;
          comp.push_back(selected[t]);
        }
    std::sort(comp.begin(), comp.end());
    std::vector<Vec> roots;
    for (int i : comp) roots.push_back(rs.simple_roots()[i]);
    RootSystem sub = RootSystem::from_simple_roots(roots);
    // Recover the node order chosen by the classification by matching vectors.
    std::vector<int> nodes(comp.size());
    for (size_t j = 0; j < comp.size(); ++j) {
      const Vec& sr = sub.simple_roots()[j];
      auto it = std::find_if(comp.begin(), comp.end(),
                             [&](int i) { return rs.simple_roots()[i] == sr; });
      nodes[j] = *it;
    }
    ls.components.push_back({std::move(nodes), std::move(sub)});
  }

  // Projector P = B (B^T B)^{-1} B^T with B columns the selected roots.
  const size_t k = selected.size();
  Mat gram(k, Vec(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      gram[i][j] = dot(rs.simple_roots()[selected[i]], rs.simple_roots()[selected[j]]);
  Mat ginv(k, Vec(k));
  for (size_t i = 0; i < k; ++i) {
    Vec e = zero_vec(k);
    e[i] = 1;
    Vec col = solve_linear(gram, e);
    for (size_t j = 0; j < k; ++j) ginv[j][i] = col[j];
  }
  for (size_t a = 0; a < dim; ++a)
    for (size_t b = 0; b < dim; ++b) {
      Rat s = 0;
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
          s += rs.simple_roots()[selected[i]][a] * ginv[i][j] * rs.simple_roots()[selected[j]][b];
      ls.projector[a][b] = s;
    }
  return ls;
}

ProjectedWeight project_weight(const RootSystem& rs, const LeviSubsystem& ls, const Weight& lambda) {
  if (!rs.is_dominant(lambda))
    throw PreconditionError("project_weight requires a dominant weight");
  Vec semi = apply_matrix(ls.projector, lambda.ambient);
  ProjectedWeight out;
  out.semisimple = rs.weight_from_ambient(semi);
  out.central = rs.weight_from_ambient(vec_sub(lambda.ambient, semi));
  for (const auto& comp : ls.components) {
    Vec fund(comp.nodes.size());
    for (size_t j = 0; j < comp.nodes.size(); ++j) fund[j] = lambda.fund[comp.nodes[j]];
    out.component_fund.push_back(std::move(fund));
  }
  return out;
}

}  // namespace orbitcone
