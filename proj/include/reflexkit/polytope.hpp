#ifndef REFLEXKIT_POLYTOPE_HPP
#define REFLEXKIT_POLYTOPE_HPP

#include "reflexkit/lattice.hpp"

#include <vector>

namespace reflexkit {

/// {x : <x, normal> >= -offset}. The normal is primitive and lives in
/// the dual context; the half-space is tight on the polytope carrying it.
struct HalfSpace {
  LatticeVector normal;
  Rat offset;

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// <x, normal> = value on the affine hull; only present for polytopes of
/// less than full dimension.
struct HullEquality {
  LatticeVector normal;
  Rat value;

  friend bool operator==(const HullEquality&, const HullEquality&) = default;
};

/// A polytope with exact V- and H-representations.  Vertices are rational
/// so polar duals of non-reflexive polytopes stay representable; the
/// `lattice` flag records integrality.  For lower-dimensional polytopes
/// the facet list is relative to the affine hull cut out by `equalities`.
/// All stored sets are in canonical lexicographic order.
class Polytope {
public:
  Polytope() = default;

  const LatticeContext& ctx() const { return ctx_; }
  const std::vector<RationalVector>& vertices() const { return vertices_; }
  const std::vector<HalfSpace>& facets() const { return facets_; }
  const std::vector<HullEquality>& equalities() const { return equalities_; }
  int dim() const { return dim_; }
  bool is_lattice() const { return lattice_; }
  bool is_full_dimensional() const { return dim_ == ctx_.total_rank(); }

  std::vector<LatticeVector> lattice_vertices() const;

  bool contains(const RationalVector& x) const;
  bool contains(const LatticeVector& x) const;
  /// Full-dimensional and every facet holds strictly.
  bool strictly_contains(const RationalVector& x) const;
  bool origin_interior() const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.ctx_ == b.ctx_ && a.vertices_ == b.vertices_;
  }

private:
  LatticeContext ctx_;
  std::vector<RationalVector> vertices_;
  std::vector<HalfSpace> facets_;
  std::vector<HullEquality> equalities_;
  int dim_ = -1;
  bool lattice_ = false;

  friend struct PolytopeBuilder;
};

/// Convex hull with minimal V-representation and tight irredundant
/// H-representation.  Lower-dimensional inputs allowed.
Polytope hull(const std::vector<RationalVector>& points);
Polytope hull(const std::vector<LatticeVector>& points);
Polytope point_polytope(const LatticeVector& p);

/// Polar dual {n : <m, n> >= -1 for all m in P}; requires a
/// full-dimensional P with the origin strictly interior.
Polytope dual_polytope(const Polytope& p);

/// Lattice polytope, full-dimensional, 0 strictly interior, integral dual.
bool is_reflexive(const Polytope& p);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

/// Convex hull of the union.
Polytope uplus(const Polytope& p, const Polytope& q);

std::vector<LatticeVector> lattice_points(const Polytope& p);
Int lattice_point_count(const Polytope& p);
/// Lattice points not in the relative... strictly: points on the
/// topological boundary; for a reflexive polytope this is all lattice
/// points except the origin.
std::vector<LatticeVector> boundary_lattice_points(const Polytope& p);

/// min over P of <., u>; u on the dual side.
Rat support_min(const Polytope& p, const LatticeVector& u);

/// {c x + t : x in P}, c a positive integer.
Polytope scale_translate(const Polytope& p, const Int& c, const LatticeVector& t);
Polytope translate(const Polytope& p, const LatticeVector& t);

/// Vertex enumeration of {x : <x, n_i> >= -c_i}; the region must be
/// bounded and nonempty.
Polytope polytope_from_halfspaces(const std::vector<HalfSpace>& halfspaces,
                                  const LatticeContext& ctx);

/// Image under an affine lattice map (hull of vertex images).
Polytope apply_map(const AffineLatticeMap& f, const Polytope& p);

bool same_vertex_set(const Polytope& p, const Polytope& q);

} // namespace reflexkit

#endif
