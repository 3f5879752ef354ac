#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reflexkit/cone.hpp"
#include "reflexkit/polytope.hpp"

using namespace reflexkit;

namespace {

const LatticeContext M1{1, 0, Side::M};
const LatticeContext M2{2, 0, Side::M};

LatticeVector lv(std::vector<Int> c, const LatticeContext& ctx) {
  return LatticeVector(std::move(c), ctx);
}

} // namespace

TEST_CASE("square hull and dual") {
  Polytope sq = hull(std::vector<LatticeVector>{
      lv({-1, -1}, M2), lv({1, -1}, M2), lv({-1, 1}, M2), lv({1, 1}, M2)});
  CHECK(sq.dim() == 2);
  CHECK(sq.vertices().size() == 4);
  CHECK(sq.facets().size() == 4);
  CHECK(sq.origin_interior());
  CHECK(is_reflexive(sq));

  Polytope dual = dual_polytope(sq);
  CHECK(dual.is_lattice());
  CHECK(dual.vertices().size() == 4);
  CHECK(lattice_point_count(sq) == 9);
  CHECK(lattice_point_count(dual) == 5);
  CHECK(dual_polytope(dual) == sq);
}

TEST_CASE("cone over segment is gorenstein") {
  Polytope seg = hull(std::vector<LatticeVector>{lv({-1}, M1), lv({1}, M1)});
  Cone c = cone_over(seg);
  CHECK(c.generators().size() == 2);
  GorensteinData g = gorenstein_support(c);
  CHECK(g.support.coords == std::vector<Int>{0, 1});
  CHECK(g.is_reflexive);
  CHECK(*g.index == 1);
  auto rp = reflexive_polytope_of_cone(c);
  CHECK(rp.polytope.vertices().size() == 2);
  CHECK(is_reflexive(rp.polytope));
  CHECK(project_dual_slice(c) == dual_polytope(rp.polytope));
}

TEST_CASE("first orthant index 2") {
  Cone c = make_cone({lv({1, 0}, M2), lv({0, 1}, M2)}, M2);
  GorensteinData g = gorenstein_support(c);
  CHECK(g.support.coords == std::vector<Int>{1, 1});
  CHECK(*g.index == 2);
  auto rp = reflexive_polytope_of_cone(c);
  CHECK(rp.polytope.dim() == 1);
  CHECK(rp.polytope.vertices().size() == 2);
}
