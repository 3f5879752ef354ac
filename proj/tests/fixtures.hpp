#ifndef REFLEXKIT_TEST_FIXTURES_HPP
#define REFLEXKIT_TEST_FIXTURES_HPP

#include "reflexkit/cayley.hpp"

#include <vector>

namespace fixtures {

using namespace reflexkit;

inline const LatticeContext M1{1, 0, Side::M};
inline const LatticeContext M2{2, 0, Side::M};
inline const LatticeContext N1{1, 0, Side::N};
inline const LatticeContext N2{2, 0, Side::N};

inline LatticeVector lv(std::vector<Int> c, const LatticeContext& ctx) {
  return LatticeVector(std::move(c), ctx);
}

inline Polytope poly(const std::vector<std::vector<Int>>& pts, const LatticeContext& ctx) {
  std::vector<LatticeVector> vs;
  for (const auto& p : pts) vs.push_back(lv(p, ctx));
  return hull(vs);
}

/// E1: the segment [-1,1] split as [-1,0] + [0,1].
inline MinkowskiDecomposition e1() {
  return make_decomposition({poly({{-1}, {0}}, M1), poly({{0}, {1}}, M1)});
}

/// E2: the square [-1,1]^2 split as [-1,0]^2 + [0,1]^2.
inline MinkowskiDecomposition e2() {
  return make_decomposition({poly({{-1, -1}, {-1, 0}, {0, -1}, {0, 0}}, M2),
                             poly({{0, 0}, {0, 1}, {1, 0}, {1, 1}}, M2)});
}

/// The simplex conv{(1,0),(0,1),(-1,-1)}.
inline Polytope s2_simplex() { return poly({{1, 0}, {0, 1}, {-1, -1}}, M2); }

/// The reflexive hexagon conv{(-1,-1),(-1,0),(0,1),(1,1),(1,0),(0,-1)}.
inline Polytope hexagon() {
  return poly({{-1, -1}, {-1, 0}, {0, 1}, {1, 1}, {1, 0}, {0, -1}}, M2);
}

/// The hexagon as the sum of its two obvious triangles (a nef-partition).
inline MinkowskiDecomposition hexagon_split() {
  return make_decomposition({poly({{-1, -1}, {0, -1}, {0, 0}}, M2),
                             poly({{0, 0}, {0, 1}, {1, 1}}, M2)});
}

/// k = 0 decomposition of a reflexive polytope into itself.
inline MinkowskiDecomposition trivial_split(const Polytope& p) {
  return make_decomposition({p});
}

} // namespace fixtures

#endif
