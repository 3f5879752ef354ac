#ifndef REFLEXKIT_CAYLEY_HPP
#define REFLEXKIT_CAYLEY_HPP

#include "reflexkit/cone.hpp"

#include <string>
#include <vector>

namespace reflexkit {

/// A reflexive polytope together with lattice summands whose Minkowski
/// sum it is.  Validity (exact vertex equality of the sum, reflexivity
/// of the total) is established at construction.
struct MinkowskiDecomposition {
  std::vector<Polytope> summands;
  Polytope total;

  int k() const { return static_cast<int>(summands.size()) - 1; }
  const LatticeContext& base_ctx() const { return total.ctx(); }
};

MinkowskiDecomposition make_decomposition(std::vector<Polytope> summands);
/// Cross-checks a separately supplied total.
MinkowskiDecomposition make_decomposition(std::vector<Polytope> summands,
                                          const Polytope& expected_total);

/// A decomposition whose summands all contain the origin.
struct NefPartition {
  MinkowskiDecomposition dec;
};

NefPartition make_nef_partition(MinkowskiDecomposition dec);
bool is_nef_partition(const MinkowskiDecomposition& dec);

LatticeContext mbar_ctx(const MinkowskiDecomposition& dec);   // M (+) Z^{k+1}
LatticeContext nbar_ctx(const MinkowskiDecomposition& dec);
LatticeContext mtilde_ctx(const MinkowskiDecomposition& dec); // M (+) Z^k
LatticeContext ntilde_ctx(const MinkowskiDecomposition& dec);

/// The Cayley cone, its dual, and the three derived polytope families
/// with their sums and convex unions.
struct CayleyData {
  MinkowskiDecomposition dec;
  Cone cayley_cone;       // in M-bar
  Cone cayley_dual_cone;  // in N-bar
  GorensteinData gor;     // of the Cayley cone; index k+1

  std::vector<Polytope> hat_delta;    // Conv(D_0, D_1+e_1, ...) - delta_i e_i, in M-tilde
  std::vector<Polytope> hat_nabla;    // in N-tilde
  std::vector<Polytope> tilde_delta;  // Conv(D_i + e_i, 0), in M-tilde

  Polytope sum_hat_delta;
  Polytope sum_hat_nabla;
  Polytope sum_tilde_delta;
  Polytope uplus_hat_nabla;
  Polytope uplus_tilde_delta;

  Polytope delta_star; // dual of the total
};

/// Builds the Cayley cone three ways (point generators, homogenization
/// of Conv(D_0, D_1+e_1, ...), cone over the joint hull), verifies the
/// three agree, and populates the derived families.
CayleyData build_cayley(const MinkowskiDecomposition& dec);

/// Dual Cayley cone from the explicit generator formula
/// u - sum_i min<D_i, u> r_i* over all lattice points u of the dual
/// polytope, plus the r_i*; verified equal to dual_cone of the Cayley
/// cone.
Cone cayley_dual(const MinkowskiDecomposition& dec);

/// The nef-partition contained in the dual Cayley cone:
/// hn_0 = Conv({u - sum_{i>=1} min<D_i,u> e_i*} u {e_1*..e_k*}),
/// hn_i = hn_0 - e_i*.
std::vector<Polytope> hat_nabla(const MinkowskiDecomposition& dec);

/// Polar-dual nef-partition (exact H-representation intersection).
NefPartition dual_nef_partition(const NefPartition& np);

/// Lattice automorphism of M-tilde mapping the convex union of the
/// tilde family onto the sum of the hat family.
AffineLatticeMap phi_map(const MinkowskiDecomposition& dec);
/// Its dual-side counterpart on N-tilde.
AffineLatticeMap phi_star_map(const MinkowskiDecomposition& dec);

struct VerificationItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationItem> items;

  bool all_pass() const;
  void add(std::string name, bool pass, std::string detail = "");
};

/// Checks the duality web: the dual formulas for the family sums, the
/// convex-union dualities, the lattice isomorphisms, the lattice-point
/// census, and for nef-partitions the full eight-polytope web.
VerificationReport verify_duality_web(const MinkowskiDecomposition& dec);

} // namespace reflexkit

#endif
