#include "reflexkit/cone.hpp"

#include "reflexkit/linalg.hpp"
#include "reflexkit/raycore.hpp"

#include <algorithm>
#include <set>

namespace reflexkit {

namespace {

std::vector<std::vector<Int>> raw(const std::vector<LatticeVector>& vs) {
  std::vector<std::vector<Int>> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(v.coords);
  return out;
}

std::vector<LatticeVector> wrap(const std::vector<std::vector<Int>>& vs,
                                const LatticeContext& ctx) {
  std::vector<LatticeVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.emplace_back(v, ctx);
  return out;
}

void sort_lex(std::vector<LatticeVector>& vs) {
  std::sort(vs.begin(), vs.end(),
            [](const LatticeVector& a, const LatticeVector& b) { return lex_less(a, b); });
}

} // namespace

bool Cone::contains(const LatticeVector& x) const {
  if (!(x.ctx == ctx_)) throw ContextMismatch("cone membership");
  for (const auto& e : eq_normals_)
    if (pairing(x, e) != 0) return false;
  for (const auto& h : ineq_normals_)
    if (pairing(x, h) < 0) return false;
  return true;
}

bool Cone::contains(const Cone& other) const {
  if (!(other.ctx_ == ctx_)) throw ContextMismatch("cone containment");
  for (const auto& g : other.generators_)
    if (!contains(g)) return false;
  return true;
}

Cone make_cone(const std::vector<LatticeVector>& raw_generators, const LatticeContext& ctx) {
  std::set<std::vector<Int>> uniq;
  for (const auto& g : raw_generators) {
    if (!(g.ctx == ctx)) throw ContextMismatch("make_cone over mixed contexts");
    if (g.is_zero()) continue;
    uniq.insert(primitive(g.coords));
  }
  std::vector<std::vector<Int>> gens(uniq.begin(), uniq.end());
  const int n = ctx.total_rank();

  // Dual description: rays of {y : <g, y> >= 0} are the inequality
  // normals, its lineality the equations cutting out the span.
  RayDescription dual_side = extreme_rays(gens, n);

  std::vector<std::vector<Int>> constraints = dual_side.rays;
  for (const auto& e : dual_side.lineality) {
    constraints.push_back(e);
    std::vector<Int> neg(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
    constraints.push_back(std::move(neg));
  }
  RayDescription primal_side = extreme_rays(constraints, n);

  Cone c;
  c.ctx_ = ctx;
  c.ineq_normals_ = wrap(dual_side.rays, ctx.dual());
  c.eq_normals_ = wrap(dual_side.lineality, ctx.dual());
  std::vector<std::vector<Int>> final_gens = primal_side.rays;
  for (const auto& l : primal_side.lineality) {
    final_gens.push_back(l);
    std::vector<Int> neg(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
    final_gens.push_back(std::move(neg));
  }
  c.generators_ = wrap(final_gens, ctx);
  sort_lex(c.generators_);
  c.dim_ = n - static_cast<int>(c.eq_normals_.size());
  c.pointed_ = primal_side.lineality.empty();
  return c;
}

Cone dual_cone(const Cone& c) {
  std::vector<LatticeVector> gens = c.ineq_normals();
  for (const auto& e : c.eq_normals()) {
    gens.push_back(e);
    gens.push_back(-e);
  }
  return make_cone(gens, c.ctx().dual());
}

Cone cone_over(const Polytope& p, const Int& height) {
  if (!p.is_lattice()) throw InternalError("cone_over requires a lattice polytope");
  if (height <= 0) throw InvalidHeight("cone_over height must be positive");
  LatticeContext ext{p.ctx().rank_base, p.ctx().rank_extension + 1, p.ctx().side};
  std::vector<LatticeVector> gens;
  for (const auto& v : p.lattice_vertices()) {
    std::vector<Int> c = v.coords;
    c.push_back(height);
    gens.emplace_back(std::move(c), ext);
  }
  return make_cone(gens, ext);
}

GorensteinData gorenstein_support(const Cone& c) {
  if (!c.is_full_dimensional())
    throw NotFullDimensional("gorenstein_support on a cone of dim " +
                             std::to_string(c.dim()));
  auto solve_support = [](const std::vector<LatticeVector>& gens,
                          const LatticeContext& target) -> std::optional<LatticeVector> {
    RatMatrix a = to_rational(raw(gens));
    std::vector<Rat> b(gens.size(), Rat(1));
    auto x = solve(a, b);
    if (!x) return std::nullopt;
    std::vector<Int> xi(x->size());
    for (std::size_t i = 0; i < x->size(); ++i) {
      if (!is_integer((*x)[i])) return std::nullopt;
      xi[i] = num((*x)[i]);
    }
    return LatticeVector(std::move(xi), target);
  };

  GorensteinData g;
  auto n_sigma = solve_support(c.generators(), c.ctx().dual());
  if (!n_sigma) throw NotGorenstein("no integral support vector at height 1");
  g.support = *n_sigma;

  Cone d = dual_cone(c);
  auto m_dual = d.is_full_dimensional() ? solve_support(d.generators(), c.ctx())
                                        : std::nullopt;
  if (m_dual) {
    g.is_reflexive = true;
    g.dual_support = *m_dual;
    g.index = pairing(*m_dual, g.support);
    if (*g.index <= 0) throw InternalError("gorenstein index must be positive");
    for (const auto& h : c.ineq_normals())
      if (pairing(*g.dual_support, h) <= 0)
        throw InternalError("dual support not interior to the cone");
    for (const auto& h : d.ineq_normals())
      if (pairing(h, g.support) <= 0)
        throw InternalError("support not interior to the dual cone");
  }
  return g;
}

Polytope slice(const Cone& c, const GorensteinData& g, const Int& i) {
  if (i <= 0) throw InvalidHeight("slice height must be positive");
  std::vector<LatticeVector> pts;
  for (const auto& gen : c.generators()) {
    if (pairing(gen, g.support) != 1)
      throw NotGorenstein("support vector does not belong to this cone");
    pts.push_back(i * gen);
  }
  return hull(pts);
}

namespace {

Int xgcd(const Int& a, const Int& b, Int& x, Int& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : Int(-a);
  }
  Int x1, y1;
  Int g = xgcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

/// Saturated basis of {x : <n, x> = 0} for a primitive functional n,
/// via a unimodular transform sending n to a unit vector.
std::vector<std::vector<Int>> lattice_kernel_of_functional(const std::vector<Int>& n) {
  const int len = static_cast<int>(n.size());
  std::vector<std::vector<Int>> u(len, std::vector<Int>(len, 0)); // columns
  for (int i = 0; i < len; ++i) u[i][i] = 1;
  std::vector<Int> v = n; // invariant: v = n * U
  for (int i = 1; i < len; ++i) {
    if (v[i] == 0) continue;
    Int a, b;
    Int d = xgcd(v[0], v[i], a, b);
    Int p = v[0] / d, q = v[i] / d;
    for (int r = 0; r < len; ++r) {
      Int c0 = u[r][0], ci = u[r][i];
      u[r][0] = a * c0 + b * ci;
      u[r][i] = -q * c0 + p * ci;
    }
    v[0] = d;
    v[i] = 0;
  }
  if (!(v[0] == 1 || v[0] == -1))
    throw InternalError("lattice_kernel_of_functional: functional not primitive");
  std::vector<std::vector<Int>> basis;
  for (int j = 1; j < len; ++j) {
    std::vector<Int> col(len);
    for (int r = 0; r < len; ++r) col[r] = u[r][j];
    basis.push_back(std::move(col));
  }
  return basis;
}

} // namespace

SliceChart slice_chart(const Cone& c) {
  GorensteinData g = gorenstein_support(c);
  if (!g.is_reflexive) throw NotReflexiveGorenstein("slice chart needs a reflexive cone");
  const int n = c.ctx().total_rank();
  const auto& supp = g.support;

  SliceChart chart;
  chart.gor = g;

  int j = -1;
  for (int i = 0; i < n; ++i)
    if (supp[i] == 1 || supp[i] == -1) { j = i; break; }

  std::vector<std::vector<Int>> basis_cols;
  if (j >= 0) {
    chart.deleted_coordinate = j;
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      std::vector<Int> b(n, 0);
      b[i] = 1;
      b[j] = -supp[i] * supp[j];
      basis_cols.push_back(std::move(b));
    }
  } else {
    basis_cols = lattice_kernel_of_functional(supp.coords);
  }

  // Reduced context: drop one extension coordinate when the support
  // hits the extension block, one base coordinate when it hits the base,
  // and fall back to a plain rank when no coordinate was deleted.
  LatticeContext red;
  red.side = c.ctx().side;
  if (j < 0) {
    red.rank_base = n - 1;
    red.rank_extension = 0;
  } else if (j >= c.ctx().rank_base) {
    red.rank_base = c.ctx().rank_base;
    red.rank_extension = c.ctx().rank_extension - 1;
  } else {
    red.rank_base = c.ctx().rank_base - 1;
    red.rank_extension = c.ctx().rank_extension;
  }
  chart.reduced_ctx = red;

  for (const auto& b : basis_cols) chart.basis.emplace_back(b, c.ctx());

  std::vector<std::vector<Int>> mat(n, std::vector<Int>(n - 1, 0));
  for (int col = 0; col < n - 1; ++col)
    for (int row = 0; row < n; ++row) mat[row][col] = basis_cols[col][row];
  chart.to_ambient = {std::move(mat), g.dual_support->coords, red, c.ctx()};
  return chart;
}

namespace {

LatticeVector reduced_coordinates(const SliceChart& chart, const LatticeVector& ambient_pt,
                                  const LatticeVector& origin_shift) {
  // coordinates c with ambient_pt - shift = B c
  const int n = static_cast<int>(ambient_pt.size());
  if (chart.deleted_coordinate) {
    std::vector<Int> c;
    for (int i = 0; i < n; ++i)
      if (i != *chart.deleted_coordinate) c.push_back(ambient_pt[i] - origin_shift[i]);
    return LatticeVector(std::move(c), chart.reduced_ctx);
  }
  RatMatrix a(n, std::vector<Rat>(n - 1));
  for (int row = 0; row < n; ++row)
    for (int col = 0; col < n - 1; ++col) a[row][col] = Rat(chart.basis[col][row]);
  std::vector<Rat> rhs(n);
  for (int i = 0; i < n; ++i) rhs[i] = Rat(ambient_pt[i] - origin_shift[i]);
  auto sol = solve(a, rhs);
  if (!sol) throw InternalError("reduced_coordinates: point outside the sublattice");
  std::vector<Int> c(sol->size());
  for (std::size_t i = 0; i < sol->size(); ++i) {
    if (!is_integer((*sol)[i]))
      throw InternalError("reduced_coordinates: non-integral coordinates");
    c[i] = num((*sol)[i]);
  }
  return LatticeVector(std::move(c), chart.reduced_ctx);
}

} // namespace

ReducedReflexive reflexive_polytope_of_cone(const Cone& c) {
  SliceChart chart = slice_chart(c);
  const Int& r = *chart.gor.index;
  const LatticeVector& m = *chart.gor.dual_support;
  std::vector<LatticeVector> pts;
  for (const auto& gen : c.generators())
    pts.push_back(reduced_coordinates(chart, r * gen, m));
  ReducedReflexive out;
  out.polytope = hull(pts);
  out.chart = std::move(chart);
  return out;
}

Polytope project_dual_slice(const Cone& c) {
  SliceChart chart = slice_chart(c);
  Cone d = dual_cone(c);
  std::vector<LatticeVector> pts;
  for (const auto& gen : d.generators()) {
    std::vector<Int> coords;
    coords.reserve(chart.basis.size());
    for (const auto& b : chart.basis) coords.push_back(pairing(b, gen));
    pts.emplace_back(std::move(coords), chart.reduced_ctx.dual());
  }
  return hull(pts);
}

namespace {

void sort_cones(std::vector<Cone>& cones) {
  std::sort(cones.begin(), cones.end(), [](const Cone& a, const Cone& b) {
    return raw(a.generators()) < raw(b.generators());
  });
}

Fan normal_fan_impl(const Polytope& p) {
  Fan f;
  f.ctx = p.ctx().dual();
  for (const auto& v : p.vertices()) {
    std::vector<LatticeVector> gens;
    for (const auto& fc : p.facets())
      if (pairing(v, fc.normal) == -fc.offset) gens.push_back(fc.normal);
    for (const auto& e : p.equalities()) {
      gens.push_back(e.normal);
      gens.push_back(-e.normal);
    }
    f.maximal_cones.push_back(make_cone(gens, f.ctx));
  }
  sort_cones(f.maximal_cones);
  f.maximal_cones.erase(std::unique(f.maximal_cones.begin(), f.maximal_cones.end()),
                        f.maximal_cones.end());
  f.complete = true;
  return f;
}

} // namespace

Fan face_fan(const Polytope& p) {
  if (!p.origin_interior()) throw OriginNotInterior("face fan needs 0 in the interior");
  Fan f;
  f.ctx = p.ctx();
  for (const auto& fc : p.facets()) {
    std::vector<LatticeVector> gens;
    for (const auto& v : p.vertices())
      if (pairing(v, fc.normal) == -fc.offset)
        gens.emplace_back(primitive_direction(v.coords), f.ctx);
    f.maximal_cones.push_back(make_cone(gens, f.ctx));
  }
  sort_cones(f.maximal_cones);
  f.complete = true;
  return f;
}

Fan normal_fan(const Polytope& p) {
  if (!p.is_full_dimensional())
    throw NotFullDimensional("normal_fan of a polytope of dim " + std::to_string(p.dim()));
  return normal_fan_impl(p);
}

bool refines(const Fan& a, const Fan& b) {
  if (!(a.ctx == b.ctx)) throw ContextMismatch("refines");
  for (const auto& ca : a.maximal_cones) {
    bool inside = false;
    for (const auto& cb : b.maximal_cones)
      if (cb.contains(ca)) { inside = true; break; }
    if (!inside) return false;
  }
  return true;
}

bool is_nef(const Polytope& p, const Fan& f) {
  if (!(f.ctx == p.ctx().dual())) throw ContextMismatch("is_nef");
  return refines(f, normal_fan_impl(p));
}

} // namespace reflexkit
