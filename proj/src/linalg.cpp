#include "reflexkit/linalg.hpp"

#include <cstddef>
#include <stdexcept>

namespace reflexkit {

RatMatrix to_rational(const std::vector<std::vector<Int>>& m) {
  RatMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    r[i].reserve(m[i].size());
    for (const Int& x : m[i]) r[i].emplace_back(x);
  }
  return r;
}

namespace {

struct Echelon {
  RatMatrix rows;             // echelon rows, pivot = 1
  std::vector<int> pivot_col; // per row
  int cols = 0;
};

Echelon echelonize(RatMatrix m) {
  Echelon e;
  e.cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  int r = 0;
  int nrows = static_cast<int>(m.size());
  for (int c = 0; c < e.cols && r < nrows; ++c) {
    int p = -1;
    for (int i = r; i < nrows; ++i)
      if (m[i][c] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    Rat inv = m[r][c];
    for (int j = c; j < e.cols; ++j) m[r][j] /= inv;
    for (int i = 0; i < nrows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = c; j < e.cols; ++j) m[i][j] -= f * m[r][j];
    }
    e.pivot_col.push_back(c);
    ++r;
  }
  m.resize(r);
  e.rows = std::move(m);
  return e;
}

} // namespace

int rank(RatMatrix m) { return static_cast<int>(echelonize(std::move(m)).rows.size()); }

RatMatrix rref(RatMatrix m) { return echelonize(std::move(m)).rows; }

std::optional<std::vector<Rat>> solve(const RatMatrix& a, const std::vector<Rat>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: size mismatch");
  if (a.empty()) return std::vector<Rat>{};
  std::size_t n = a[0].size();
  RatMatrix aug(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    aug[i] = a[i];
    aug[i].push_back(b[i]);
  }
  Echelon e = echelonize(std::move(aug));
  std::vector<Rat> x(n, Rat(0));
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    int c = e.pivot_col[i];
    if (c == static_cast<int>(n)) return std::nullopt; // 0 = 1 row
    x[c] = e.rows[i].back();
  }
  return x;
}

std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& a) {
  if (a.empty()) return {};
  std::size_t n = a[0].size();
  Echelon e = echelonize(a);
  std::vector<bool> is_pivot(n, false);
  for (int c : e.pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(n, Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivot_col[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Int>> integer_kernel_basis(const std::vector<std::vector<Int>>& a) {
  std::vector<std::vector<Int>> out;
  for (const auto& v : kernel_basis(to_rational(a))) out.push_back(primitive_direction(v));
  return out;
}

std::vector<Rat> mat_vec(const RatMatrix& a, const std::vector<Rat>& x) {
  std::vector<Rat> y(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

} // namespace reflexkit
