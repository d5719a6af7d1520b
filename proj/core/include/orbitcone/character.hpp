#pragma once

#include <map>
#include <vector>

#include "orbitcone/root_system.hpp"

namespace orbitcone {

// Integral weights in fundamental coordinates. All character arithmetic runs
// on these integer vectors; ambient rational vectors appear only where inner
// products are needed.
using FundVec = std::vector<long long>;

// W-symmetric weight function with full support.
struct WeightCharacter {
  std::map<FundVec, Int> mult;

  Int mass() const;
};

// Decomposition into irreducibles, keyed by dominant highest weight.
struct IrrDecomposition {
  std::map<FundVec, Int> components;
};

inline constexpr size_t kCharacterCap = 10000000;

FundVec fund_coords(const RootSystem& rs, const Weight& w);  // throws if non-integral
Weight weight_of(const RootSystem& rs, const FundVec& f);

// Highest weight of the dual module, -w0(lambda), for any constructed system.
FundVec dual_fund(const RootSystem& rs, const FundVec& lambda);

Int weyl_dim(const RootSystem& rs, const FundVec& lambda);

// Multiplicities of the dominant weights of V_lambda (Freudenthal).
std::map<FundVec, Int> dominant_character(const RootSystem& rs, const FundVec& lambda,
                                          size_t cap = kCharacterCap);

// Full W-symmetric character of V_lambda.
WeightCharacter full_character(const RootSystem& rs, const FundVec& lambda,
                               size_t cap = kCharacterCap);

// V_a tensor V_b via Brauer-Klimyk.
IrrDecomposition tensor_decompose(const RootSystem& rs, const FundVec& a, const FundVec& b,
                                  size_t cap = kCharacterCap);

// dim (V_{q lambda}^{tensor r})^K, by iterated Klimyk with norm pruning.
Int invariant_dim_tensor_power(const RootSystem& rs, const FundVec& lambda, int r, int q,
                               size_t cap = kCharacterCap);

// Multiplicity of the trivial module in a character, by Weyl alternation.
Int trivial_multiplicity(const RootSystem& rs, const WeightCharacter& ch);

// dim (S^d V_lambda)^K via the Adams/Newton recursion on characters.
Int symmetric_power_invariant_dim(const RootSystem& rs, const FundVec& lambda, int d,
                                  size_t cap = kCharacterCap);

// All of dim (S^d V_lambda)^K for d = 0..d_max with a single recursion.
std::vector<Int> symmetric_power_invariant_dims(const RootSystem& rs, const FundVec& lambda,
                                                int d_max, size_t cap = kCharacterCap);

// Convolution product of weight functions (used by the symmetric-power
// recursion and as a test-side oracle for tensor products).
WeightCharacter character_product(const WeightCharacter& x, const WeightCharacter& y,
                                  size_t cap = kCharacterCap);

}  // namespace orbitcone
