#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitcone/character.hpp"
#include "orbitcone/convex.hpp"

namespace orbitcone {

// Status ordering, strongest first. "Exact assuming saturation" means the
// lower bound rests on tensor failures tested only over the configured
// saturation q-set; "upper bound only" means no lower-bound claim at all.
enum class BoundStatus { Exact, ExactAssumingSaturation, UpperBoundOnly };

std::string status_name(BoundStatus s);
BoundStatus weaker(BoundStatus a, BoundStatus b);

struct TensorCertificate {
  int q = 0;
  int r = 0;
  Int dim;  // positive invariant dimension of V_{q lambda}^{tensor r}
};

struct BoundResult {
  std::optional<int> value;  // empty = unknown above the search bound
  BoundStatus status = BoundStatus::UpperBoundOnly;
  std::optional<ZeroCertificate> weyl_certificate;
  std::optional<TensorCertificate> tensor_certificate;
  std::string lower_bound_reason;
  std::vector<std::string> transcript;
};

struct SearchOptions {
  int r_max = 0;             // 0 = rank + 1 (Caratheodory bound)
  std::vector<int> q_set;    // empty = series default
  size_t orbit_cap = 1000000;
  size_t char_cap = kCharacterCap;
};

// Default saturation q-set per series: {1} in type A (Knutson-Tao), {1,2}
// otherwise.
std::vector<int> default_q_set(Series s);

// Smallest r with 0 in C_r(K lambda). Pre: lambda dominant (rational
// coordinates allowed; the value is scale-invariant).
BoundResult r0(const RootSystem& rs, const Weight& lambda, const SearchOptions& opts = {});

// Smallest r with C_r(K lambda) convex: max of r0 over the projections of
// lambda to the connected sub-diagrams (empty set contributing 1).
BoundResult r_invariant(const RootSystem& rs, const Weight& lambda,
                        const SearchOptions& opts = {});

// Smallest positive d with (S^d V_lambda)^K nonzero, up to d_max.
std::optional<int> d1(const RootSystem& rs, const FundVec& lambda, int d_max);

// Smallest b such that some q <= q_max gives (S^b V_{q lambda})^K nonzero.
// Bounded search; no saturation claim. Pre: lambda nonzero.
std::optional<int> b1(const RootSystem& rs, const FundVec& lambda, int d_max, int q_max);

struct Theorem1Report {
  int r0_value = 0;
  std::optional<int> b1_value;
  struct Entry {
    int q;
    std::optional<int> d1_value;
    bool ok;  // vacuously true when d1 is undefined within the bound
  };
  std::vector<Entry> entries;
  bool ok = true;
  std::vector<std::string> lines;
};

// Checks r0(lambda) <= d1(q lambda) for each q, and b1 >= r0 when b1 is found.
Theorem1Report verify_theorem1(const RootSystem& rs, const FundVec& lambda,
                               const std::vector<int>& q_range, int d_max);

enum class ConeAnswer { Yes, No, Unknown };

ConeAnswer in_cone_Ar(const RootSystem& rs, const Weight& lambda, int r,
                      const SearchOptions& opts = {});
ConeAnswer in_cone_Cr(const RootSystem& rs, const Weight& lambda, int r,
                      const SearchOptions& opts = {});

struct R2CriterionReport {
  bool condition_iv = false;  // equal pairings with same-length simple roots
  bool r_equals_2 = false;
  bool agree = false;
};

// Condition (iv) versus the computed r(lambda) = 2. Pre: lambda dominant,
// nonzero.
R2CriterionReport check_r2_criterion(const RootSystem& rs, const Weight& lambda);

struct TableRow {
  std::string label;
  long long expected = 0;
  long long computed = 0;
  bool ok = false;
};

struct TablesReport {
  std::vector<TableRow> rows;
  bool all_ok = true;
  std::vector<std::string> notes;  // includes the ceil(n/3) resolution
};

// Recompute the closed-form fundamental-weight values and diff them:
// r0(varpi_j, SU_n) against the Euclidean-algorithm sum for n <= su_max_n,
// the two published forms for j=3, the spin values for D5, and the r(varpi_j)
// tables when check_r_tables is set.
TablesReport verify_paper_tables(int su_max_n, bool check_r_tables);

// Euclidean-algorithm sum of quotients for r0(varpi_j, SU_n).
long long euclid_quotient_sum(long long n, long long j);

}  // namespace orbitcone
