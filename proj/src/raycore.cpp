#include "reflexkit/raycore.hpp"

#include "reflexkit/errors.hpp"
#include "reflexkit/linalg.hpp"

#include <algorithm>
#include <set>

namespace reflexkit {

namespace {

std::vector<Int> sign_normalized(std::vector<Int> v) {
  for (const Int& x : v) {
    if (x > 0) return v;
    if (x < 0) {
      for (Int& y : v) y = -y;
      return v;
    }
  }
  return v;
}

// All size-k index subsets of {0..m-1}, visited in lexicographic order.
template <typename F>
void for_each_subset(int m, int k, F&& fn) {
  if (k < 0 || k > m) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

} // namespace

RayDescription extreme_rays(const std::vector<std::vector<Int>>& normals, int n) {
  RayDescription out;
  for (const auto& h : normals)
    if (static_cast<int>(h.size()) != n)
      throw InternalError("extreme_rays: normal length mismatch");

  if (normals.empty()) { // no constraints: the whole space
    for (int i = 0; i < n; ++i) {
      std::vector<Int> e(n, 0);
      e[i] = 1;
      out.lineality.push_back(std::move(e));
    }
    return out;
  }

  // Lineality = common kernel of the normals.
  std::vector<std::vector<Int>> lin = integer_kernel_basis(normals);
  for (auto& v : lin) v = sign_normalized(std::move(v));
  std::sort(lin.begin(), lin.end());
  out.lineality = lin;

  int r = n - static_cast<int>(lin.size());
  if (r == 0) return out; // whole subspace, no pointed part

  // Coordinate complement of the lineality: unit vectors at the pivot
  // columns of the normal matrix.
  RatMatrix rr = rref(to_rational(normals));
  std::vector<int> pivots;
  for (const auto& row : rr) {
    for (int c = 0; c < n; ++c)
      if (row[c] != 0) { pivots.push_back(c); break; }
  }
  if (static_cast<int>(pivots.size()) != r)
    throw InternalError("extreme_rays: pivot count mismatch");

  // Normals restricted to the complement coordinates.
  std::vector<std::vector<Int>> h(normals.size(), std::vector<Int>(r));
  for (std::size_t i = 0; i < normals.size(); ++i)
    for (int j = 0; j < r; ++j) h[i][j] = normals[i][pivots[j]];

  std::set<std::vector<Int>> found;
  int m = static_cast<int>(h.size());
  for_each_subset(m, r - 1, [&](const std::vector<int>& idx) {
    std::vector<std::vector<Int>> sub;
    sub.reserve(idx.size());
    for (int i : idx) sub.push_back(h[i]);
    std::vector<std::vector<Rat>> ker =
        sub.empty() ? kernel_basis(RatMatrix{std::vector<Rat>(r, Rat(0))})
                    : kernel_basis(to_rational(sub));
    if (ker.size() != 1) return;
    std::vector<Int> w = primitive_direction(ker[0]);
    for (int sign = 0; sign < 2; ++sign) {
      bool ok = true;
      for (int i = 0; i < m && ok; ++i) {
        Int s = 0;
        for (int j = 0; j < r; ++j) s += h[i][j] * w[j];
        if (s < 0) ok = false;
      }
      if (ok) {
        std::vector<Int> y(n, 0);
        for (int j = 0; j < r; ++j) y[pivots[j]] = w[j];
        found.insert(y);
      }
      for (Int& x : w) x = -x;
    }
  });

  out.rays.assign(found.begin(), found.end());
  return out;
}

} // namespace reflexkit
