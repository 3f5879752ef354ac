#ifndef REFLEXKIT_CONE_HPP
#define REFLEXKIT_CONE_HPP

#include "reflexkit/polytope.hpp"

#include <optional>
#include <vector>

namespace reflexkit {

/// Rational polyhedral cone with apex 0, stored by its minimal primitive
/// generators together with a cached dual description.  Cones with
/// lineality carry +/- basis pairs among the generators and list the
/// equations cutting out their span in `eq_normals`.
class Cone {
public:
  Cone() = default;

  const LatticeContext& ctx() const { return ctx_; }
  const std::vector<LatticeVector>& generators() const { return generators_; }
  const std::vector<LatticeVector>& ineq_normals() const { return ineq_normals_; }
  const std::vector<LatticeVector>& eq_normals() const { return eq_normals_; }
  int dim() const { return dim_; }
  bool is_pointed() const { return pointed_; }
  bool is_full_dimensional() const { return dim_ == ctx_.total_rank(); }

  bool contains(const LatticeVector& x) const;
  bool contains(const Cone& other) const;

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.ctx_ == b.ctx_ && a.generators_ == b.generators_;
  }

private:
  LatticeContext ctx_;
  std::vector<LatticeVector> generators_;
  std::vector<LatticeVector> ineq_normals_;
  std::vector<LatticeVector> eq_normals_;
  int dim_ = 0;
  bool pointed_ = true;

  friend Cone make_cone(const std::vector<LatticeVector>&, const LatticeContext&);
};

/// Cone generated by the given vectors (minimized, primitivized,
/// canonically ordered; zero vectors ignored).
Cone make_cone(const std::vector<LatticeVector>& raw_generators, const LatticeContext& ctx);

/// {n : <m, n> >= 0 for all m in C} with minimal primitive generators.
Cone dual_cone(const Cone& c);

/// Homogenization {(t P, t height) : t >= 0} in the context with one more
/// extension coordinate.
Cone cone_over(const Polytope& p, const Int& height = 1);

struct GorensteinData {
  LatticeVector support;                      // n_sigma, dual context
  bool is_reflexive = false;
  std::optional<LatticeVector> dual_support;  // m_{sigma-dual}, primal context
  std::optional<Int> index;                   // r = <dual_support, support>
};

/// The unique support vector taking value 1 on all primitive generators;
/// fills the reflexive data when the dual cone is Gorenstein too.
GorensteinData gorenstein_support(const Cone& c);

/// sigma_(i) = {x in sigma : <x, n_sigma> = i}, as a polytope in the
/// ambient coordinates.
Polytope slice(const Cone& c, const GorensteinData& g, const Int& i);

/// Coordinates for the sublattice n_sigma-perp: when n_sigma has a +/-1
/// coordinate, the basis deletes that coordinate; otherwise any integral
/// basis, recorded in the chart.
struct SliceChart {
  GorensteinData gor;
  std::vector<LatticeVector> basis; // basis of support-perp, ambient primal ctx
  std::optional<int> deleted_coordinate;
  LatticeContext reduced_ctx;       // primal side, rank n-1
  AffineLatticeMap to_ambient;      // reduced coords -> ambient, x = B c + m
};

SliceChart slice_chart(const Cone& c);

/// sigma_(r) - m_{sigma-dual} in the chart coordinates; reflexive.
struct ReducedReflexive {
  Polytope polytope;
  SliceChart chart;
};

ReducedReflexive reflexive_polytope_of_cone(const Cone& c);

/// Image of sigma-dual_(1) under the quotient by the support line, in the
/// coordinates dual to the chart of reflexive_polytope_of_cone; equals
/// the polar dual of that reflexive polytope.
Polytope project_dual_slice(const Cone& c);

struct Fan {
  LatticeContext ctx;
  std::vector<Cone> maximal_cones;
  bool complete = false;
};

/// Cones over the proper faces (facets) of P; requires 0 interior.
Fan face_fan(const Polytope& p);

/// Normal fan: maximal cones are the vertex normal cones spanned by
/// inward facet normals.  The public operation requires a
/// full-dimensional P; lower-dimensional polytopes get normal cones with
/// lineality through the nef test below.
Fan normal_fan(const Polytope& p);

/// True iff every maximal cone of A lies inside some maximal cone of B.
bool refines(const Fan& a, const Fan& b);

/// D_P is nef on the toric variety of F, i.e. F refines the normal fan
/// of P (lower-dimensional P allowed).
bool is_nef(const Polytope& p, const Fan& f);

} // namespace reflexkit

#endif
