#include <doctest.h>

#include <random>

#include "orbitcone/character.hpp"

using namespace orbitcone;

namespace {

// Independent decomposition oracle: multiply full characters, then peel off
// the highest remaining weight repeatedly.
std::map<FundVec, Int> decompose_by_subtraction(const RootSystem& rs, const WeightCharacter& ch) {
  std::map<FundVec, Int> rest = ch.mult;
  std::map<FundVec, Int> out;
  while (!rest.empty()) {
    // any weight of maximal norm-with-rho is dominant and a highest weight
    auto top = rest.end();
    Rat best = -1;
    for (auto it = rest.begin(); it != rest.end(); ++it) {
      Vec amb = weight_of(rs, it->first).ambient;
      Vec shifted = vec_add(amb, rs.rho().ambient);
      Rat n = dot(shifted, shifted);
      if (n > best) {
        best = n;
        top = it;
      }
    }
    FundVec hw = top->first;
    for (long long c : hw) REQUIRE(c >= 0);
    Int mult = top->second;
    REQUIRE(mult > 0);
    out[hw] = mult;
    for (const auto& [w, m] : full_character(rs, hw).mult) {
      auto it = rest.find(w);
      REQUIRE(it != rest.end());
      it->second -= mult * m;
      REQUIRE(it->second >= 0);
      if (it->second == 0) rest.erase(it);
    }
  }
  return out;
}

FundVec random_fund(int rank, std::mt19937& gen, int max_coeff) {
  std::uniform_int_distribution<int> dist(0, max_coeff);
  FundVec f(rank);
  for (auto& c : f) c = dist(gen);
  return f;
}

Int binomial(const Int& n, long k) {
  Int out = 1;
  for (long i = 1; i <= k; ++i) out = out * (n - Int(k) + Int(i)) / Int(i);
  return out;
}

}  // namespace

TEST_CASE("Weyl dimension formula") {
  RootSystem a2 = RootSystem::build(Series::A, 2);
  CHECK(weyl_dim(a2, {0, 0}) == 1);
  CHECK(weyl_dim(a2, {1, 0}) == 3);
  CHECK(weyl_dim(a2, {1, 1}) == 8);
  RootSystem a1 = RootSystem::build(Series::A, 1);
  for (long long n = 0; n <= 6; ++n) CHECK(weyl_dim(a1, {n}) == Int(static_cast<long>(n + 1)));
  RootSystem d5 = RootSystem::build(Series::D, 5);
  CHECK(weyl_dim(d5, {0, 0, 0, 0, 1}) == 16);
  CHECK_THROWS_AS(weyl_dim(a2, {-1, 0}), PreconditionError);
}

TEST_CASE("Freudenthal dominant characters") {
  RootSystem a1 = RootSystem::build(Series::A, 1);
  auto ch = dominant_character(a1, {2});
  CHECK(ch == std::map<FundVec, Int>{{{2}, 1}, {{0}, 1}});

  RootSystem a2 = RootSystem::build(Series::A, 2);
  auto adj = dominant_character(a2, {1, 1});
  CHECK(adj.at({1, 1}) == 1);
  CHECK(adj.at({0, 0}) == 2);  // 6 roots + 2-dim zero space = 8

  CHECK(dominant_character(a2, {0, 0}) == std::map<FundVec, Int>{{{0, 0}, 1}});
}

TEST_CASE("character mass equals Weyl dimension") {
  std::mt19937 gen(17);
  for (Series s : {Series::A, Series::B, Series::C, Series::D}) {
    RootSystem rs = RootSystem::build(s, s == Series::D ? 4 : 3);
    for (int t = 0; t < 8; ++t) {
      FundVec lam = random_fund(rs.rank(), gen, 2);
      CHECK(full_character(rs, lam).mass() == weyl_dim(rs, lam));
    }
  }
}

TEST_CASE("Klimyk tensor decomposition on known cases") {
  RootSystem a1 = RootSystem::build(Series::A, 1);
  auto cg = tensor_decompose(a1, {1}, {1});
  CHECK(cg.components == std::map<FundVec, Int>{{{2}, 1}, {{0}, 1}});

  RootSystem a2 = RootSystem::build(Series::A, 2);
  auto triv = tensor_decompose(a2, {2, 1}, {0, 0});
  CHECK(triv.components == std::map<FundVec, Int>{{{2, 1}, 1}});

  auto mixed = tensor_decompose(a2, {1, 0}, {0, 1});
  CHECK(mixed.components == std::map<FundVec, Int>{{{1, 1}, 1}, {{0, 0}, 1}});
}

TEST_CASE("Klimyk agrees with character multiplication") {
  std::mt19937 gen(23);
  std::vector<RootSystem> systems;
  systems.push_back(RootSystem::build(Series::A, 1));
  systems.push_back(RootSystem::build(Series::A, 2));
  systems.push_back(RootSystem::build(Series::B, 2));
  int done = 0;
  while (done < 12) {
    const RootSystem& rs = systems[done % systems.size()];
    FundVec a = random_fund(rs.rank(), gen, 3);
    FundVec b = random_fund(rs.rank(), gen, 3);
    if (weyl_dim(rs, a) > 200 || weyl_dim(rs, b) > 200) continue;
    auto klimyk = tensor_decompose(rs, a, b);
    auto oracle =
        decompose_by_subtraction(rs, character_product(full_character(rs, a), full_character(rs, b)));
    CHECK(klimyk.components == oracle);
    // dimension bookkeeping and symmetry
    Int total = 0;
    for (const auto& [hw, m] : klimyk.components) total += m * weyl_dim(rs, hw);
    CHECK(total == weyl_dim(rs, a) * weyl_dim(rs, b));
    CHECK(tensor_decompose(rs, b, a).components == klimyk.components);
    ++done;
  }
}

TEST_CASE("invariant dimensions of tensor powers") {
  RootSystem a2 = RootSystem::build(Series::A, 2);
  CHECK(invariant_dim_tensor_power(a2, {1, 0}, 3, 1) == 1);  // determinant
  CHECK(invariant_dim_tensor_power(a2, {1, 0}, 2, 1) == 0);
  RootSystem a1 = RootSystem::build(Series::A, 1);
  CHECK(invariant_dim_tensor_power(a1, {1}, 2, 1) == 1);  // symplectic form
  CHECK(invariant_dim_tensor_power(a1, {1}, 3, 1) == 0);
  CHECK(invariant_dim_tensor_power(a2, {0, 0}, 5, 2) == 1);
  CHECK(invariant_dim_tensor_power(a2, {1, 1}, 1, 1) == 0);

  // duality: lambda and lambda* give the same invariant dimensions
  for (int r = 2; r <= 4; ++r)
    CHECK(invariant_dim_tensor_power(a2, {2, 0}, r, 1) ==
          invariant_dim_tensor_power(a2, dual_fund(a2, {2, 0}), r, 1));

  // cross-check r=3 against the trivial multiplicity of a full product
  RootSystem b2 = RootSystem::build(Series::B, 2);
  for (const FundVec& lam : {FundVec{1, 0}, FundVec{0, 1}, FundVec{1, 1}}) {
    WeightCharacter ch = full_character(b2, lam);
    WeightCharacter cube = character_product(character_product(ch, ch), ch);
    CHECK(invariant_dim_tensor_power(b2, lam, 3, 1) == trivial_multiplicity(b2, cube));
  }
}

TEST_CASE("symmetric power invariants") {
  RootSystem a1 = RootSystem::build(Series::A, 1);
  CHECK(symmetric_power_invariant_dim(a1, {2}, 0) == 1);
  CHECK(symmetric_power_invariant_dim(a1, {2}, 1) == 0);
  CHECK(symmetric_power_invariant_dim(a1, {2}, 2) == 1);  // discriminant
  CHECK(symmetric_power_invariant_dim(a1, {3}, 2) == 0);
  CHECK(symmetric_power_invariant_dim(a1, {3}, 3) == 0);
  CHECK(symmetric_power_invariant_dim(a1, {3}, 4) == 1);  // binary cubic
  RootSystem a2 = RootSystem::build(Series::A, 2);
  CHECK(symmetric_power_invariant_dim(a2, {1, 1}, 1) == 0);
  CHECK(symmetric_power_invariant_dim(a2, {1, 1}, 2) == 1);

  // mass of S^d: decompose the symmetric power character and compare the
  // dimension bookkeeping with binomial(dim V + d - 1, d)
  std::mt19937 gen(31);
  for (int t = 0; t < 6; ++t) {
    FundVec lam = random_fund(2, gen, 2);
    int d = 1 + static_cast<int>(gen() % 3);
    WeightCharacter chv = full_character(a2, lam);
    std::vector<WeightCharacter> sym(d + 1);
    sym[0].mult[FundVec{0, 0}] = 1;
    for (int m = 1; m <= d; ++m) {
      std::map<FundVec, Int> acc;
      for (int k = 1; k <= m; ++k) {
        WeightCharacter psi;
        for (const auto& [w, mm] : chv.mult) psi.mult[{k * w[0], k * w[1]}] = mm;
        for (const auto& [w, c] : character_product(psi, sym[m - k]).mult) acc[w] += c;
      }
      for (auto& [w, c] : acc) {
        REQUIRE(c % m == 0);
        if (c / m != 0) sym[m].mult.emplace(w, c / m);
      }
    }
    Int total = 0;
    for (const auto& [hw, m] : decompose_by_subtraction(a2, sym[d]))
      total += m * weyl_dim(a2, hw);
    CHECK(total == binomial(weyl_dim(a2, lam) + (d - 1), d));
    auto dec = decompose_by_subtraction(a2, sym[d]);
    Int triv = dec.count({0, 0}) ? dec.at({0, 0}) : Int(0);
    CHECK(symmetric_power_invariant_dim(a2, lam, d) == triv);
  }
}
