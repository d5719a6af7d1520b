#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace orbitcone {

using Rat = mpq_class;
using Int = mpz_class;
using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

// Invalid series/rank or malformed user input.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured cap (orbit size, character size, grid size) was exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation was called outside its contract.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat parse_rational(const std::string& s) {
  if (s.empty()) throw ConfigError("empty rational literal");
  try {
    Rat r(s);
    if (r.get_den() == 0) throw ConfigError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ConfigError("bad rational literal: '" + s + "'");
  }
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Rat& r) {
  if (!is_integer(r)) throw PreconditionError("expected integer, got " + rat_str(r));
  return static_cast<long>(r.get_num().get_si());
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline Vec vec_scale(const Vec& a, const Rat& s) {
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] * s;
  return c;
}

inline Vec vec_neg(const Vec& a) { return vec_scale(a, Rat(-1)); }

inline Rat dot(const Vec& a, const Vec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

inline Vec zero_vec(size_t n) { return Vec(n, Rat(0)); }

// Least common multiple of denominators; scaling by this makes the vector integral.
inline Int common_denominator(const Vec& v) {
  Int d = 1;
  for (const auto& x : v) {
    Int g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), x.get_den().get_mpz_t());
    d = d / g * x.get_den();
  }
  return d;
}

// Gcd of numerators of d*v; dividing by it makes the integral vector primitive.
inline Int content(const Vec& v) {
  Int d = common_denominator(v);
  Int g = 0;
  for (const auto& x : v) {
    Int n = x.get_num() * (d / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  return g;  // zero for the zero vector
}

std::string vec_str(const Vec& v);

// Solves A x = b by Gaussian elimination; throws PreconditionError if singular
// or inconsistent. A is row-major, square or overdetermined-consistent.
Vec solve_linear(Mat a, Vec b);

// Rank of a rational matrix (rows are vectors).
size_t matrix_rank(Mat a);

}  // namespace orbitcone
