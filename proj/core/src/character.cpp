#include "orbitcone/character.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace orbitcone {

namespace {

using Cartan = std::vector<std::vector<long>>;

// s_i in fundamental coordinates: x -> x - x_i * (row i of the Cartan matrix).
void reflect_fund(const Cartan& c, FundVec& x, int i) {
  long long xi = x[i];
  if (xi == 0) return;
  for (size_t j = 0; j < x.size(); ++j) x[j] -= xi * c[i][j];
}

FundVec dominantize(const Cartan& c, FundVec x) {
  for (;;) {
    int neg = -1;
    for (size_t i = 0; i < x.size(); ++i)
      if (x[i] < 0) {
        neg = static_cast<int>(i);
        break;
      }
    if (neg < 0) return x;
    reflect_fund(c, x, neg);
  }
}

// Dominantize a rho-shifted point, tracking det(w); 0 when on a wall.
int dominantize_signed(const Cartan& c, FundVec& x) {
  int sign = 1;
  for (;;) {
    int neg = -1;
    for (size_t i = 0; i < x.size(); ++i)
      if (x[i] < 0) {
        neg = static_cast<int>(i);
        break;
      }
    if (neg < 0) break;
    reflect_fund(c, x, neg);
    sign = -sign;
  }
  for (long long v : x)
    if (v == 0) return 0;
  return sign;
}

// Inverse of C^T, mapping fundamental coordinates to simple-root coordinates.
Mat root_coord_transform(const RootSystem& rs) {
  const int n = rs.rank();
  Mat ct(n, Vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ct[j][i] = rs.cartan()[i][j];
  Mat inv(n, Vec(n));
  for (int i = 0; i < n; ++i) {
    Vec e = zero_vec(n);
    e[i] = 1;
    Vec col = solve_linear(ct, e);
    for (int j = 0; j < n; ++j) inv[j][i] = col[j];
  }
  return inv;
}

Vec root_coords(const Mat& inv, const FundVec& x) {
  Vec out(inv.size(), Rat(0));
  for (size_t i = 0; i < inv.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) out[i] += inv[i][j] * Rat(static_cast<long>(x[j]));
  return out;
}

FundVec sub(const FundVec& a, const FundVec& b) {
  FundVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

// Does the dominant weight mu lie under lambda (lambda - mu in Q+)?
bool under(const Mat& inv, const FundVec& lambda, const FundVec& mu) {
  Vec c = root_coords(inv, sub(lambda, mu));
  for (const auto& v : c)
    if (v < 0 || !is_integer(v)) return false;
  return true;
}

}  // namespace

Int WeightCharacter::mass() const {
  Int total = 0;
  for (const auto& [w, m] : mult) total += m;
  return total;
}

FundVec fund_coords(const RootSystem& rs, const Weight& w) {
  if (!rs.is_integral(w)) throw PreconditionError("weight is not integral");
  FundVec out(w.fund.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = to_long(w.fund[i]);
  return out;
}

Weight weight_of(const RootSystem& rs, const FundVec& f) {
  Vec fund(f.size());
  for (size_t i = 0; i < f.size(); ++i) fund[i] = Rat(static_cast<long>(f[i]));
  return rs.weight_from_fund(std::move(fund));
}

FundVec dual_fund(const RootSystem& rs, const FundVec& lambda) {
  FundVec neg(lambda.size());
  for (size_t i = 0; i < lambda.size(); ++i) neg[i] = -lambda[i];
  return dominantize(rs.cartan(), std::move(neg));
}

Int weyl_dim(const RootSystem& rs, const FundVec& lambda) {
  for (long long v : lambda)
    if (v < 0) throw PreconditionError("weyl_dim requires a dominant weight");
  Vec lam_rho = vec_add(weight_of(rs, lambda).ambient, rs.rho().ambient);
  Rat prod = 1;
  for (const auto& alpha : rs.positive_roots()) {
    prod *= dot(lam_rho, alpha) / dot(rs.rho().ambient, alpha);
  }
  if (!is_integer(prod)) throw std::logic_error("Weyl dimension is not an integer");
  return prod.get_num();
}

std::map<FundVec, Int> dominant_character(const RootSystem& rs, const FundVec& lambda,
                                          size_t cap) {
  for (long long v : lambda)
    if (v < 0) throw PreconditionError("dominant_character requires a dominant weight");
  const Cartan& C = rs.cartan();
  const int n = rs.rank();
  Mat inv = root_coord_transform(rs);

  // Full weight support: BFS from lambda by subtracting simple roots, keeping
  // weights whose dominant representative stays under lambda.
  std::set<FundVec> support{lambda};
  std::queue<FundVec> todo;
  todo.push(lambda);
  while (!todo.empty()) {
    FundVec v = std::move(todo.front());
    todo.pop();
    for (int i = 0; i < n; ++i) {
      FundVec w = v;
      for (int j = 0; j < n; ++j) w[j] -= C[i][j];
      if (support.count(w)) continue;
      if (!under(inv, lambda, dominantize(C, w))) continue;
      if (support.size() >= cap) throw ResourceError("character size cap exceeded");
      support.insert(w);
      todo.push(w);
    }
  }

  auto height = [&](const FundVec& mu) {
    Vec c = root_coords(inv, sub(lambda, mu));
    Rat h = 0;
    for (const auto& v : c) h += v;
    return to_long(h);
  };
  std::vector<FundVec> dominants;
  for (const auto& v : support)
    if (std::all_of(v.begin(), v.end(), [](long long x) { return x >= 0; }))
      dominants.push_back(v);
  std::sort(dominants.begin(), dominants.end(), [&](const FundVec& a, const FundVec& b) {
    return height(a) < height(b);
  });

  // Freudenthal, highest weight downward.
  Vec lam_rho = vec_add(weight_of(rs, lambda).ambient, rs.rho().ambient);
  Rat lam_norm = dot(lam_rho, lam_rho);
  std::map<FundVec, Int> mult;
  for (const auto& mu : dominants) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    Vec mu_amb = weight_of(rs, mu).ambient;
    Rat num = 0;
    for (size_t a = 0; a < rs.positive_roots().size(); ++a) {
      const Vec& alpha = rs.positive_roots()[a];
      const auto& alpha_f = rs.positive_roots_fund()[a];
      Rat pair = dot(mu_amb, alpha);
      Rat step = dot(alpha, alpha);
      for (long long k = 1;; ++k) {
        FundVec nu = mu;
        for (int j = 0; j < n; ++j) nu[j] += k * alpha_f[j];
        auto it = mult.find(dominantize(C, std::move(nu)));
        if (it == mult.end()) break;
        num += Rat(it->second) * (pair + Rat(static_cast<long>(k)) * step);
      }
    }
    Vec mu_rho = vec_add(mu_amb, rs.rho().ambient);
    Rat m = 2 * num / (lam_norm - dot(mu_rho, mu_rho));
    if (!is_integer(m) || m <= 0) throw std::logic_error("Freudenthal recursion failed");
    mult[mu] = m.get_num();
  }
  return mult;
}

WeightCharacter full_character(const RootSystem& rs, const FundVec& lambda, size_t cap) {
  const Cartan& C = rs.cartan();
  WeightCharacter ch;
  for (const auto& [mu, m] : dominant_character(rs, lambda, cap)) {
    // Weyl orbit of mu in fundamental coordinates.
    std::set<FundVec> orbit{mu};
    std::vector<FundVec> stack{mu};
    while (!stack.empty()) {
      FundVec v = std::move(stack.back());
      stack.pop_back();
      for (int i = 0; i < rs.rank(); ++i) {
        FundVec w = v;
        reflect_fund(C, w, i);
        if (orbit.insert(w).second) {
          if (orbit.size() + ch.mult.size() > cap)
            throw ResourceError("character size cap exceeded");
          stack.push_back(std::move(w));
        }
      }
    }
    for (const auto& v : orbit) ch.mult[v] = m;
  }
  return ch;
}

IrrDecomposition tensor_decompose(const RootSystem& rs, const FundVec& a, const FundVec& b,
                                  size_t cap) {
  // Run Klimyk over the character of the smaller factor.
  const FundVec& shift_side = weyl_dim(rs, a) >= weyl_dim(rs, b) ? a : b;
  const FundVec& char_side = weyl_dim(rs, a) >= weyl_dim(rs, b) ? b : a;
  WeightCharacter ch = full_character(rs, char_side, cap);
  const Cartan& C = rs.cartan();
  const int n = rs.rank();
  std::map<FundVec, Int> acc;
  for (const auto& [nu, m] : ch.mult) {
    FundVec x(n);
    for (int j = 0; j < n; ++j) x[j] = nu[j] + shift_side[j] + 1;  // + rho
    int s = dominantize_signed(C, x);
    if (s == 0) continue;
    for (int j = 0; j < n; ++j) x[j] -= 1;
    acc[x] += s > 0 ? m : -m;
  }
  IrrDecomposition out;
  for (auto& [hw, m] : acc) {
    if (m == 0) continue;
    if (m < 0) throw std::logic_error("negative multiplicity in tensor decomposition");
    out.components.emplace(hw, std::move(m));
  }
  return out;
}

Int invariant_dim_tensor_power(const RootSystem& rs, const FundVec& lambda, int r, int q,
                               size_t cap) {
  if (r < 1 || q < 1) throw PreconditionError("invariant_dim_tensor_power: r, q must be >= 1");
  const int n = rs.rank();
  FundVec mu0(n);
  for (int j = 0; j < n; ++j) mu0[j] = q * lambda[j];
  if (std::all_of(mu0.begin(), mu0.end(), [](long long v) { return v == 0; })) return 1;
  if (r == 1) return 0;

  WeightCharacter ch = full_character(rs, mu0, cap);
  const Cartan& C = rs.cartan();

  // Scaled integer Gram matrix on fundamental coordinates, for norm pruning.
  Int den = 1;
  for (const auto& row : rs.fund_gram()) {
    Int d = common_denominator(row);
    Int g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    den = den / g * d;
  }
  std::vector<std::vector<long long>> gram(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram[i][j] = to_long(rs.fund_gram()[i][j] * Rat(den));
  auto norm2 = [&](const FundVec& v) {
    __int128 s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += static_cast<__int128>(gram[i][j]) * v[i] * v[j];
    return s;
  };
  __int128 maxw2 = 0;
  for (const auto& [w, m] : ch.mult) maxw2 = std::max(maxw2, norm2(w));

  // The last factor is absorbed by duality: the answer is the multiplicity of
  // (q lambda)* in the (r-1)-fold power. A component mu survives only if
  // |mu| <= (r - j) * maxw after j factors, since mu* must be a sum of r - j
  // weights of V for the trivial module to appear downstream.
  FundVec target = dual_fund(rs, mu0);
  std::map<FundVec, Int> dec{{mu0, 1}};
  for (int j = 1; j <= r - 2; ++j) {
    std::map<FundVec, Int> next;
    for (const auto& [mu, mult] : dec) {
      for (const auto& [nu, m] : ch.mult) {
        FundVec x(n);
        for (int t = 0; t < n; ++t) x[t] = mu[t] + nu[t] + 1;
        int s = dominantize_signed(C, x);
        if (s == 0) continue;
        for (int t = 0; t < n; ++t) x[t] -= 1;
        __int128 budget = static_cast<__int128>(r - j - 1) * (r - j - 1) * maxw2;
        if (norm2(x) > budget) continue;
        next[x] += s > 0 ? Int(mult * m) : Int(-(mult * m));
        if (next.size() > cap) throw ResourceError("character size cap exceeded");
      }
    }
    for (auto it = next.begin(); it != next.end();) {
      if (it->second == 0) {
        it = next.erase(it);
      } else if (it->second < 0) {
        throw std::logic_error("negative multiplicity in tensor power");
      } else {
        ++it;
      }
    }
    dec = std::move(next);
  }
  auto it = dec.find(target);
  return it == dec.end() ? Int(0) : it->second;
}

Int trivial_multiplicity(const RootSystem& rs, const WeightCharacter& ch) {
  const Cartan& C = rs.cartan();
  const int n = rs.rank();
  FundVec rho(n, 1);
  // Enumerate W as the orbit of rho; det(w) flips with each reflection edge.
  std::map<FundVec, int> orbit{{rho, 1}};
  std::vector<FundVec> stack{rho};
  while (!stack.empty()) {
    FundVec v = std::move(stack.back());
    stack.pop_back();
    int s = orbit.at(v);
    for (int i = 0; i < n; ++i) {
      FundVec w = v;
      reflect_fund(C, w, i);
      if (orbit.emplace(w, -s).second) stack.push_back(std::move(w));
    }
  }
  Int total = 0;
  for (const auto& [wrho, s] : orbit) {
    auto it = ch.mult.find(sub(wrho, rho));
    if (it == ch.mult.end()) continue;
    total += s > 0 ? it->second : -it->second;
  }
  if (total < 0) throw std::logic_error("negative trivial multiplicity");
  return total;
}

WeightCharacter character_product(const WeightCharacter& x, const WeightCharacter& y,
                                  size_t cap) {
  WeightCharacter out;
  for (const auto& [a, ma] : x.mult)
    for (const auto& [b, mb] : y.mult) {
      FundVec s(a.size());
      for (size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      out.mult[s] += ma * mb;
      if (out.mult.size() > cap) throw ResourceError("character size cap exceeded");
    }
  return out;
}

Int symmetric_power_invariant_dim(const RootSystem& rs, const FundVec& lambda, int d,
                                  size_t cap) {
  return symmetric_power_invariant_dims(rs, lambda, d, cap).at(d);
}

std::vector<Int> symmetric_power_invariant_dims(const RootSystem& rs, const FundVec& lambda,
                                                int d_max, size_t cap) {
  if (d_max < 0) throw PreconditionError("symmetric power degree must be >= 0");
  const int d = d_max;
  std::vector<Int> out(d + 1);
  out[0] = 1;
  if (d == 0) return out;
  WeightCharacter chv = full_character(rs, lambda, cap);
  // Adams operations: psi^k scales every weight by k.
  auto psi = [&](int k) {
    WeightCharacter out;
    for (const auto& [w, m] : chv.mult) {
      FundVec s(w.size());
      for (size_t i = 0; i < w.size(); ++i) s[i] = k * w[i];
      out.mult[s] = m;
    }
    return out;
  };
  std::vector<WeightCharacter> sym(d + 1);
  sym[0].mult[FundVec(rs.rank(), 0)] = 1;
  for (int m = 1; m <= d; ++m) {
    std::map<FundVec, Int> acc;
    for (int k = 1; k <= m; ++k) {
      WeightCharacter term = character_product(psi(k), sym[m - k], cap);
      for (const auto& [w, c] : term.mult) {
        acc[w] += c;
        if (acc.size() > cap) throw ResourceError("character size cap exceeded");
      }
    }
    for (auto& [w, c] : acc) {
      Int quot, rem;
      mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), Int(m).get_mpz_t());
      if (rem != 0) throw std::logic_error("Newton recursion produced a non-integer");
      if (quot != 0) sym[m].mult.emplace(w, std::move(quot));
    }
    out[m] = trivial_multiplicity(rs, sym[m]);
  }
  return out;
}

}  // namespace orbitcone
