#include "reflexkit/polytope.hpp"

#include "reflexkit/linalg.hpp"
#include "reflexkit/raycore.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace reflexkit {

namespace {

struct RawFacet {
  std::vector<Int> normal; // primitive
  Rat rhs;                 // <x, normal> >= rhs
};

struct RawHull {
  std::vector<std::size_t> vertex_idx;
  std::vector<RawFacet> facets;
};

template <typename F>
void for_each_subset(std::size_t m, int k, F&& fn) {
  if (k < 0 || k > static_cast<int>(m)) return;
  std::vector<std::size_t> idx(k);
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

Rat dot_iq(const std::vector<Int>& a, const std::vector<Rat>& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += b[i] * a[i];
  return s;
}

// Facet enumeration by exhausting supporting hyperplanes spanned by
// d-subsets of the points; exact and exhaustive at this scale.
RawHull raw_hull_fulldim(const std::vector<std::vector<Rat>>& pts, int d) {
  RawHull out;
  std::set<std::pair<std::vector<Int>, Rat>> seen;
  for_each_subset(pts.size(), d, [&](const std::vector<std::size_t>& idx) {
    RatMatrix diffs;
    for (int j = 1; j < d; ++j) {
      std::vector<Rat> row(d);
      for (int c = 0; c < d; ++c) row[c] = pts[idx[j]][c] - pts[idx[0]][c];
      diffs.push_back(std::move(row));
    }
    std::vector<std::vector<Rat>> ker =
        diffs.empty() ? kernel_basis(RatMatrix{std::vector<Rat>(d, Rat(0))})
                      : kernel_basis(diffs);
    if (ker.size() != 1) return;
    std::vector<Int> w = primitive_direction(ker[0]);
    Rat rhs = dot_iq(w, pts[idx[0]]);
    bool any_above = false, any_below = false;
    for (const auto& p : pts) {
      Rat v = dot_iq(w, p);
      if (v > rhs) any_above = true;
      if (v < rhs) any_below = true;
      if (any_above && any_below) return;
    }
    if (any_below) { // orient inward
      for (Int& x : w) x = -x;
      rhs = -rhs;
    }
    if (seen.insert({w, rhs}).second) out.facets.push_back({std::move(w), rhs});
  });

  for (std::size_t i = 0; i < pts.size(); ++i) {
    RatMatrix tight;
    for (const auto& f : out.facets)
      if (dot_iq(f.normal, pts[i]) == f.rhs) tight.push_back(to_rational({f.normal})[0]);
    if (rank(std::move(tight)) == d) out.vertex_idx.push_back(i);
  }
  return out;
}

} // namespace

struct PolytopeBuilder {
  static Polytope make(const LatticeContext& ctx, std::vector<RationalVector> verts,
                       std::vector<HalfSpace> facets, std::vector<HullEquality> eqs,
                       int dim) {
    std::sort(verts.begin(), verts.end(), [](const RationalVector& a, const RationalVector& b) {
      return lex_less(a, b);
    });
    std::sort(facets.begin(), facets.end(), [](const HalfSpace& a, const HalfSpace& b) {
      if (a.normal.coords != b.normal.coords) return a.normal.coords < b.normal.coords;
      return a.offset < b.offset;
    });
    std::sort(eqs.begin(), eqs.end(), [](const HullEquality& a, const HullEquality& b) {
      if (a.normal.coords != b.normal.coords) return a.normal.coords < b.normal.coords;
      return a.value < b.value;
    });
    Polytope p;
    p.ctx_ = ctx;
    p.vertices_ = std::move(verts);
    p.facets_ = std::move(facets);
    p.equalities_ = std::move(eqs);
    p.dim_ = dim;
    p.lattice_ = std::all_of(p.vertices_.begin(), p.vertices_.end(),
                             [](const RationalVector& x) { return x.is_integral(); });
    return p;
  }
};

std::vector<LatticeVector> Polytope::lattice_vertices() const {
  if (!lattice_) throw InternalError("lattice_vertices on a non-lattice polytope");
  std::vector<LatticeVector> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(v.to_lattice());
  return out;
}

bool Polytope::contains(const RationalVector& x) const {
  if (!(x.ctx == ctx_)) throw ContextMismatch("membership in " + to_string(ctx_));
  for (const auto& e : equalities_)
    if (pairing(x, e.normal) != e.value) return false;
  for (const auto& f : facets_)
    if (pairing(x, f.normal) < -f.offset) return false;
  return true;
}

bool Polytope::contains(const LatticeVector& x) const { return contains(RationalVector(x)); }

bool Polytope::strictly_contains(const RationalVector& x) const {
  if (!is_full_dimensional()) return false;
  for (const auto& f : facets_)
    if (!(pairing(x, f.normal) > -f.offset)) return false;
  return true;
}

bool Polytope::origin_interior() const {
  if (!is_full_dimensional()) return false;
  for (const auto& f : facets_)
    if (!(f.offset > 0)) return false;
  return true;
}

namespace {

Polytope build_polytope(const LatticeContext& ctx, std::vector<RationalVector> verts,
                        std::vector<HalfSpace> facets, std::vector<HullEquality> eqs,
                        int dim) {
  return PolytopeBuilder::make(ctx, std::move(verts), std::move(facets), std::move(eqs), dim);
}

} // namespace

Polytope hull(const std::vector<RationalVector>& points) {
  if (points.empty()) throw InternalError("hull of empty point set");
  const LatticeContext ctx = points[0].ctx;
  for (const auto& p : points)
    if (!(p.ctx == ctx)) throw ContextMismatch("hull over mixed contexts");
  const int n = ctx.total_rank();

  std::vector<std::vector<Rat>> pts;
  {
    std::set<std::vector<Rat>> uniq;
    for (const auto& p : points) uniq.insert(p.coords);
    pts.assign(uniq.begin(), uniq.end());
  }
  const std::vector<Rat>& p0 = pts[0];

  RatMatrix diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rat> row(n);
    for (int c = 0; c < n; ++c) row[c] = pts[i][c] - p0[c];
    diffs.push_back(std::move(row));
  }
  const int dim = diffs.empty() ? 0 : rank(diffs);

  std::vector<RationalVector> verts;
  std::vector<HalfSpace> facets;
  std::vector<HullEquality> eqs;

  auto add_equality = [&](std::vector<Int> normal, const LatticeContext& dual_ctx) {
    for (const Int& x : normal) {
      if (x > 0) break;
      if (x < 0) {
        for (Int& y : normal) y = -y;
        break;
      }
    }
    Rat value = dot_iq(normal, p0);
    eqs.push_back({LatticeVector(std::move(normal), dual_ctx), value});
  };

  const LatticeContext dual_ctx = ctx.dual();

  if (dim == 0) {
    verts.push_back(RationalVector(p0, ctx));
    for (int i = 0; i < n; ++i) {
      std::vector<Int> e(n, 0);
      e[i] = 1;
      add_equality(std::move(e), dual_ctx);
    }
    return build_polytope(ctx, std::move(verts), std::move(facets), std::move(eqs), 0);
  }

  if (dim == n) {
    RawHull rh = raw_hull_fulldim(pts, n);
    for (std::size_t i : rh.vertex_idx) verts.push_back(RationalVector(pts[i], ctx));
    for (auto& f : rh.facets)
      facets.push_back({LatticeVector(std::move(f.normal), dual_ctx), -f.rhs});
    return build_polytope(ctx, std::move(verts), std::move(facets), std::move(eqs), n);
  }

  // Lower-dimensional: parametrize the affine hull and recurse.
  for (const auto& e : integer_kernel_basis([&] {
        std::vector<std::vector<Int>> rows;
        for (const auto& r : diffs) rows.push_back(primitive_direction(r));
        return rows;
      }()))
    add_equality(e, dual_ctx);

  // Affine basis among the difference vectors.
  RatMatrix basis;
  for (const auto& r : diffs) {
    basis.push_back(r);
    if (rank(basis) < static_cast<int>(basis.size())) basis.pop_back();
    if (static_cast<int>(basis.size()) == dim) break;
  }

  // Coordinates: solve  (columns = basis vectors) * lambda = p - p0.
  RatMatrix system(n, std::vector<Rat>(dim));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < dim; ++j) system[i][j] = basis[j][i];
  std::vector<std::vector<Rat>> lam(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<Rat> rhs(n);
    for (int c = 0; c < n; ++c) rhs[c] = pts[i][c] - p0[c];
    auto sol = solve(system, rhs);
    if (!sol) throw InternalError("hull: affine parametrization failed");
    lam[i] = *sol;
  }

  RawHull rh = raw_hull_fulldim(lam, dim);
  for (std::size_t i : rh.vertex_idx) verts.push_back(RationalVector(pts[i], ctx));

  // Pull a facet <lambda, w> >= rhs back to ambient coordinates via the
  // Gram matrix of the basis.
  RatMatrix gram(dim, std::vector<Rat>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) gram[i][j] = dot(basis[i], basis[j]);
  for (const auto& f : rh.facets) {
    auto z = solve(gram, to_rational({f.normal})[0]);
    if (!z) throw InternalError("hull: gram solve failed");
    std::vector<Rat> amb(n, Rat(0));
    for (int j = 0; j < dim; ++j)
      for (int c = 0; c < n; ++c) amb[c] += (*z)[j] * basis[j][c];
    std::vector<Int> ni = primitive_direction(amb);
    // scale factor s with ni = s * amb
    Rat s;
    for (int c = 0; c < n; ++c)
      if (amb[c] != 0) { s = Rat(ni[c]) / amb[c]; break; }
    Rat beta = dot_iq(ni, p0) + s * f.rhs; // <p, ni> >= beta
    facets.push_back({LatticeVector(std::move(ni), dual_ctx), -beta});
  }

  return build_polytope(ctx, std::move(verts), std::move(facets), std::move(eqs), dim);
}

Polytope hull(const std::vector<LatticeVector>& points) {
  std::vector<RationalVector> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.emplace_back(p);
  return hull(pts);
}

Polytope point_polytope(const LatticeVector& p) { return hull(std::vector<LatticeVector>{p}); }

Polytope dual_polytope(const Polytope& p) {
  if (!p.is_full_dimensional())
    throw NotFullDimensional("dual of a polytope of dim " + std::to_string(p.dim()));
  if (!p.origin_interior()) throw OriginNotInterior("dual polytope undefined");

  const LatticeContext dual_ctx = p.ctx().dual();
  std::vector<RationalVector> verts;
  for (const auto& f : p.facets()) {
    std::vector<Rat> v(f.normal.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rat(f.normal[i]) / f.offset;
    verts.push_back(RationalVector(std::move(v), dual_ctx));
  }
  std::vector<HalfSpace> facets;
  for (const auto& v : p.vertices()) {
    std::vector<Int> prim = primitive_direction(v.coords);
    Rat t;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) { t = Rat(prim[i]) / v[i]; break; }
    facets.push_back({LatticeVector(std::move(prim), p.ctx()), t});
  }
  return build_polytope(dual_ctx, std::move(verts), std::move(facets), {},
                        p.ctx().total_rank());
}

bool is_reflexive(const Polytope& p) {
  if (!p.is_lattice() || !p.is_full_dimensional() || !p.origin_interior()) return false;
  return dual_polytope(p).is_lattice();
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (!(p.ctx() == q.ctx())) throw ContextMismatch("minkowski_sum");
  std::vector<RationalVector> pts;
  pts.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) pts.push_back(a + b);
  return hull(pts);
}

Polytope uplus(const Polytope& p, const Polytope& q) {
  if (!(p.ctx() == q.ctx())) throw ContextMismatch("uplus");
  std::vector<RationalVector> pts = p.vertices();
  pts.insert(pts.end(), q.vertices().begin(), q.vertices().end());
  return hull(pts);
}

std::vector<LatticeVector> lattice_points(const Polytope& p) {
  const int n = p.ctx().total_rank();
  std::vector<Int> lo(n), hi(n);
  for (int c = 0; c < n; ++c) {
    Rat mn = p.vertices()[0][c], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[c]);
      mx = std::max(mx, v[c]);
    }
    lo[c] = ceil_int(mn);
    hi[c] = floor_int(mx);
    if (lo[c] > hi[c]) return {};
  }
  std::vector<LatticeVector> out;
  std::vector<Int> cur = lo;
  while (true) {
    LatticeVector x(cur, p.ctx());
    if (p.contains(x)) out.push_back(x);
    int c = n - 1;
    while (c >= 0) {
      if (cur[c] < hi[c]) {
        ++cur[c];
        break;
      }
      cur[c] = lo[c];
      --c;
    }
    if (c < 0) break;
  }
  std::sort(out.begin(), out.end(),
            [](const LatticeVector& a, const LatticeVector& b) { return lex_less(a, b); });
  return out;
}

Int lattice_point_count(const Polytope& p) { return Int(lattice_points(p).size()); }

std::vector<LatticeVector> boundary_lattice_points(const Polytope& p) {
  std::vector<LatticeVector> out;
  for (const auto& x : lattice_points(p))
    if (!p.strictly_contains(RationalVector(x))) out.push_back(x);
  return out;
}

Rat support_min(const Polytope& p, const LatticeVector& u) {
  if (!(u.ctx == p.ctx().dual())) throw ContextMismatch("support_min");
  Rat best;
  bool first = true;
  for (const auto& v : p.vertices()) {
    Rat s = pairing(v, u);
    if (first || s < best) best = s;
    first = false;
  }
  return best;
}

Polytope scale_translate(const Polytope& p, const Int& c, const LatticeVector& t) {
  if (!(t.ctx == p.ctx())) throw ContextMismatch("scale_translate");
  if (c <= 0) throw InternalError("scale_translate: scale must be positive");
  RationalVector tr{t};
  std::vector<RationalVector> verts;
  verts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) verts.push_back(Rat(c) * v + tr);
  std::vector<HalfSpace> facets;
  for (const auto& f : p.facets())
    facets.push_back({f.normal, Rat(c) * f.offset - Rat(pairing(t, f.normal))});
  std::vector<HullEquality> eqs;
  for (const auto& e : p.equalities())
    eqs.push_back({e.normal, Rat(c) * e.value + Rat(pairing(t, e.normal))});
  return build_polytope(p.ctx(), std::move(verts), std::move(facets), std::move(eqs),
                        p.dim());
}

Polytope translate(const Polytope& p, const LatticeVector& t) {
  return scale_translate(p, 1, t);
}

Polytope polytope_from_halfspaces(const std::vector<HalfSpace>& halfspaces,
                                  const LatticeContext& ctx) {
  const int n = ctx.total_rank();
  std::vector<std::vector<Int>> rows;
  for (const auto& h : halfspaces) {
    if (!(h.normal.ctx == ctx.dual())) throw ContextMismatch("polytope_from_halfspaces");
    std::vector<Int> row(n + 1);
    Int d = den(h.offset);
    for (int c = 0; c < n; ++c) row[c] = h.normal[c] * d;
    row[n] = num(h.offset);
    rows.push_back(std::move(row));
  }
  {
    std::vector<Int> tpos(n + 1, 0);
    tpos[n] = 1;
    rows.push_back(std::move(tpos));
  }
  RayDescription rd = extreme_rays(rows, n + 1);
  if (!rd.lineality.empty())
    throw InternalError("polytope_from_halfspaces: region is not bounded");
  std::vector<RationalVector> verts;
  for (const auto& r : rd.rays) {
    if (r[n] == 0) throw InternalError("polytope_from_halfspaces: region is not bounded");
    std::vector<Rat> v(n);
    for (int c = 0; c < n; ++c) v[c] = Rat(r[c]) / Rat(r[n]);
    verts.push_back(RationalVector(std::move(v), ctx));
  }
  if (verts.empty()) throw InternalError("polytope_from_halfspaces: empty region");
  return hull(verts);
}

Polytope apply_map(const AffineLatticeMap& f, const Polytope& p) {
  std::vector<RationalVector> verts;
  verts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) verts.push_back(apply_map(f, v));
  return hull(verts);
}

bool same_vertex_set(const Polytope& p, const Polytope& q) { return p == q; }

} // namespace reflexkit
