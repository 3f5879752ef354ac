#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

using namespace reflexkit;
using namespace fixtures;

namespace {

std::vector<std::vector<Int>> coords(const std::vector<LatticeVector>& vs) {
  std::vector<std::vector<Int>> out;
  for (const auto& v : vs) out.push_back(v.coords);
  return out;
}

std::vector<std::vector<Int>> vertex_coords(const Polytope& p) {
  return coords(p.lattice_vertices());
}

} // namespace

TEST_CASE("E1 cayley cone and families") {
  auto dec = e1();
  CayleyData cd = build_cayley(dec);

  CHECK(coords(cd.cayley_cone.generators()) ==
        std::vector<std::vector<Int>>{{-1, 1, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 1}});
  CHECK(cd.gor.support.coords == std::vector<Int>{0, 1, 1});
  CHECK(cd.gor.dual_support->coords == std::vector<Int>{0, 1, 1});
  CHECK(*cd.gor.index == 2);

  CHECK(vertex_coords(cd.hat_nabla[0]) ==
        std::vector<std::vector<Int>>{{-1, 1}, {0, 0}, {0, 1}, {1, 0}});
  CHECK(vertex_coords(cd.uplus_tilde_delta) ==
        std::vector<std::vector<Int>>{{-1, -1}, {0, -1}, {0, 1}, {1, 1}});
  CHECK(vertex_coords(cd.sum_hat_delta) ==
        std::vector<std::vector<Int>>{{-2, -1}, {0, -1}, {0, 1}, {2, 1}});
  CHECK(cd.sum_hat_nabla ==
        scale_translate(cd.hat_nabla[0], 2, lv({0, -1}, ntilde_ctx(dec))));

  // census 4, 7, 5
  CHECK(lattice_point_count(cd.hat_nabla[0]) == 4);
  CHECK(lattice_point_count(cd.uplus_hat_nabla) == 7);
  CHECK(lattice_point_count(cd.uplus_tilde_delta) == 5);

  // the hexagon is the sum of the tilde family
  CHECK(vertex_coords(cd.sum_tilde_delta) ==
        vertex_coords(poly({{-1, -1}, {-1, 0}, {0, 1}, {1, 1}, {1, 0}, {0, -1}},
                           mtilde_ctx(dec))));

  Cone cdual = cayley_dual(dec);
  CHECK(cdual == cd.cayley_dual_cone);
  CHECK(coords(cdual.generators()) ==
        std::vector<std::vector<Int>>{{-1, 0, 1}, {0, 0, 1}, {0, 1, 0}, {1, 1, 0}});
}

TEST_CASE("E1 nef partition duality") {
  auto dec = e1();
  NefPartition np = make_nef_partition(dec);
  NefPartition nd = dual_nef_partition(np);
  CHECK(vertex_coords(nd.dec.summands[0]) == std::vector<std::vector<Int>>{{0}, {1}});
  CHECK(vertex_coords(nd.dec.summands[1]) == std::vector<std::vector<Int>>{{-1}, {0}});
  NefPartition back = dual_nef_partition(nd);
  CHECK(back.dec.summands[0] == dec.summands[0]);
  CHECK(back.dec.summands[1] == dec.summands[1]);
}

TEST_CASE("E1 duality web") {
  VerificationReport rep = verify_duality_web(e1());
  for (const auto& item : rep.items) {
    INFO(item.name, " ", item.detail);
    CHECK(item.pass);
  }
  CHECK(rep.all_pass());
}

TEST_CASE("E2 duality web and census") {
  auto dec = e2();
  CayleyData cd = build_cayley(dec);
  CHECK(*cd.gor.index == 2);
  CHECK(lattice_point_count(cd.hat_nabla[0]) == 6);
  CHECK(lattice_point_count(cd.uplus_hat_nabla) == 11);
  CHECK(lattice_point_count(cd.uplus_tilde_delta) == 9);

  VerificationReport rep = verify_duality_web(dec);
  for (const auto& item : rep.items) {
    INFO(item.name, " ", item.detail);
    CHECK(item.pass);
  }
}

TEST_CASE("E2 dual nef partition pieces") {
  NefPartition nd = dual_nef_partition(make_nef_partition(e2()));
  CHECK(vertex_coords(nd.dec.summands[0]) ==
        std::vector<std::vector<Int>>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(vertex_coords(nd.dec.summands[1]) ==
        std::vector<std::vector<Int>>{{-1, 0}, {0, -1}, {0, 0}});
  CHECK(is_reflexive(nd.dec.total));
}

TEST_CASE("k=0 degenerate cayley") {
  auto dec = trivial_split(s2_simplex());
  CayleyData cd = build_cayley(dec);
  CHECK(*cd.gor.index == 1);
  CHECK(cd.hat_delta[0] == dec.total);
  CHECK(cd.tilde_delta[0] == dec.total);
  CHECK(cd.hat_nabla[0] == dual_polytope(dec.total));
  VerificationReport rep = verify_duality_web(dec);
  CHECK(rep.all_pass());
}

TEST_CASE("hexagon split duality web") {
  VerificationReport rep = verify_duality_web(hexagon_split());
  for (const auto& item : rep.items) {
    INFO(item.name, " ", item.detail);
    CHECK(item.pass);
  }
}

TEST_CASE("phi map on E1 matches hand values") {
  auto dec = e1();
  AffineLatticeMap phi = phi_map(dec);
  CHECK(apply_map(phi, lv({0, 1}, mtilde_ctx(dec))).coords == std::vector<Int>{0, 1});
  CHECK(apply_map(phi, lv({1, 1}, mtilde_ctx(dec))).coords == std::vector<Int>{2, 1});
}
