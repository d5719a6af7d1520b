#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbitcone/numeric.hpp"

namespace orbitcone {

enum class Series { A, B, C, D };

char series_letter(Series s);
Series series_from_letter(char c);

// A weight carried in both coordinate systems. `fund` are the coefficients
// on the fundamental weights; `ambient` is the corresponding vector in the
// realization space (inside the span of the fundamental weights).
struct Weight {
  Vec fund;
  Vec ambient;

  bool operator==(const Weight& o) const { return fund == o.fund; }
};

// A classical root system in its standard Euclidean realization, or a
// sub-system of one spanned by a subset of simple roots (a Levi factor).
// Immutable after construction; all operations are pure.
class RootSystem {
 public:
  // Standard Bourbaki realization. Rank bounds: A >= 1, B/C >= 2, D >= 3.
  static RootSystem build(Series series, int rank);

  // Sub-system living in the ambient space of a parent system. The simple
  // roots must form a single connected classical diagram; they are reordered
  // internally into the Bourbaki order of the detected series.
  static RootSystem from_simple_roots(std::vector<Vec> simple_roots);

  int rank() const { return static_cast<int>(simple_roots_.size()); }
  size_t ambient_dim() const { return ambient_dim_; }
  Series series() const { return series_; }
  std::string name() const;

  const std::vector<Vec>& simple_roots() const { return simple_roots_; }
  const std::vector<Vec>& positive_roots() const { return positive_roots_; }
  const std::vector<std::vector<long>>& cartan() const { return cartan_; }
  const std::vector<Vec>& fundamental_weights() const { return fund_weights_; }
  const Mat& fund_gram() const { return fund_gram_; }
  const Weight& rho() const { return rho_; }
  const Int& weyl_order() const { return weyl_order_; }

  // Positive roots in fundamental coordinates (integer vectors).
  const std::vector<std::vector<long>>& positive_roots_fund() const {
    return positive_roots_fund_;
  }

  Weight weight_from_fund(Vec fund) const;
  Weight weight_from_ambient(const Vec& ambient) const;
  Weight zero_weight() const;

  bool is_dominant(const Weight& w) const;
  bool is_integral(const Weight& w) const;

  Rat bilinear(const Vec& a, const Vec& b) const { return dot(a, b); }

  // Reflection in the i-th simple root, acting on ambient coordinates.
  Vec simple_reflect(int i, const Vec& x) const;

  // Action of the longest Weyl element as a signed coordinate permutation.
  // Only available on standard builds.
  Vec longest_element_action(const Vec& x) const;

  // Dominant W-orbit representative plus a word of simple reflections;
  // applying the word left-to-right to the input yields the representative.
  std::pair<Weight, std::vector<int>> dominant_representative(const Weight& w) const;

  // Full Weyl orbit as ambient points, sorted lexicographically descending
  // (so the dominant representative comes first). Throws ResourceError if the
  // orbit exceeds `cap` points.
  std::vector<Vec> weyl_orbit(const Weight& w, size_t cap = 1000000) const;

  // Dual weight -w0(lambda). Pre: lambda dominant.
  Weight dual_weight(const Weight& w) const;

  bool is_self_dual(const Weight& w) const;

 private:
  RootSystem() = default;
  void finish_construction();  // positive roots, rho, fundamental weights

  Series series_ = Series::A;
  bool standard_build_ = false;
  size_t ambient_dim_ = 0;
  std::vector<Vec> simple_roots_;
  std::vector<std::vector<long>> cartan_;
  std::vector<Vec> positive_roots_;
  std::vector<std::vector<long>> positive_roots_fund_;
  std::vector<Vec> fund_weights_;
  Mat fund_gram_;
  Weight rho_;
  Int weyl_order_;
};

// Every connected induced sub-diagram of the Dynkin diagram, plus the empty
// set. Index sets are sorted; the list is ordered by size then lexicographic.
std::vector<std::vector<int>> connected_subdiagrams(const RootSystem& rs);

Int weyl_order_formula(Series s, int rank);

}  // namespace orbitcone
