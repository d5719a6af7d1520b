#include "orbitcone/numeric.hpp"

#include <sstream>

namespace orbitcone {

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].get_str();
  }
  return os.str();
}

Vec solve_linear(Mat a, Vec b) {
  const size_t m = a.size();
  if (m == 0) throw PreconditionError("solve_linear: empty system");
  const size_t n = a[0].size();
  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t p = row;
    while (p < m && a[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[row]);
    std::swap(b[p], b[row]);
    Rat inv = a[row][col];
    for (size_t j = col; j < n; ++j) a[row][j] /= inv;
    b[row] /= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (size_t i = row; i < m; ++i)
    if (b[i] != 0) throw PreconditionError("solve_linear: inconsistent system");
  if (pivot_col.size() < n) throw PreconditionError("solve_linear: singular system");
  Vec x(n, Rat(0));
  for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
  return x;
}

size_t matrix_rank(Mat a) {
  const size_t m = a.size();
  if (m == 0) return 0;
  const size_t n = a[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < n && rank < m; ++col) {
    size_t p = rank;
    while (p < m && a[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[rank]);
    Rat inv = a[rank][col];
    for (size_t j = col; j < n; ++j) a[rank][j] /= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (size_t j = col; j < n; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace orbitcone
