#include "reflexkit/cayley.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace reflexkit {

namespace {

LatticeVector embed(const LatticeVector& v, const LatticeContext& ext_ctx) {
  std::vector<Int> c = v.coords;
  c.resize(ext_ctx.total_rank(), 0);
  return LatticeVector(std::move(c), ext_ctx);
}

/// e_i (resp. e_i*) in a k-extension context, paper numbering i = 0..k
/// with e_0 = -(e_1 + ... + e_k).
LatticeVector tilde_e(const LatticeContext& ctx, int i) {
  return i == 0 ? extension_e0(ctx) : extension_unit(ctx, i - 1);
}

Int support_min_int(const Polytope& p, const LatticeVector& u) {
  Rat m = support_min(p, u);
  if (!is_integer(m)) throw InternalError("support minimum not integral");
  return num(m);
}

Polytope fold_minkowski(const std::vector<Polytope>& ps) {
  Polytope acc = ps.at(0);
  for (std::size_t i = 1; i < ps.size(); ++i) acc = minkowski_sum(acc, ps[i]);
  return acc;
}

Polytope fold_uplus(const std::vector<Polytope>& ps) {
  std::vector<RationalVector> pts;
  for (const auto& p : ps)
    pts.insert(pts.end(), p.vertices().begin(), p.vertices().end());
  return hull(pts);
}

/// Conv(D_0, D_1 + e_1, ..., D_k + e_k) in the k-extension context.
Polytope hat_zero(const std::vector<Polytope>& summands, const LatticeContext& tilde) {
  std::vector<LatticeVector> pts;
  for (std::size_t i = 0; i < summands.size(); ++i)
    for (const auto& v : summands[i].lattice_vertices()) {
      LatticeVector p = embed(v, tilde);
      if (i > 0) p = p + tilde_e(tilde, static_cast<int>(i));
      pts.push_back(p);
    }
  return hull(pts);
}

Polytope tilde_piece(const Polytope& summand, int i, const LatticeContext& tilde) {
  std::vector<LatticeVector> pts{zero_vector(tilde)};
  for (const auto& v : summand.lattice_vertices())
    pts.push_back(embed(v, tilde) + tilde_e(tilde, i));
  return hull(pts);
}

std::vector<Polytope> hat_nabla_family(const std::vector<Polytope>& summands,
                                       const Polytope& total,
                                       const LatticeContext& ntilde) {
  const int k = static_cast<int>(summands.size()) - 1;
  Polytope star = dual_polytope(total);
  std::vector<LatticeVector> pts;
  for (const auto& u : lattice_points(star)) {
    LatticeVector img = embed(u, ntilde);
    for (int i = 1; i <= k; ++i)
      img = img - support_min_int(summands[i], u) * tilde_e(ntilde, i);
    pts.push_back(img);
  }
  for (int i = 1; i <= k; ++i) pts.push_back(tilde_e(ntilde, i));
  Polytope hn0 = hull(pts);
  std::vector<Polytope> fam{hn0};
  for (int i = 1; i <= k; ++i) fam.push_back(translate(hn0, -tilde_e(ntilde, i)));
  return fam;
}

std::vector<LatticeVector> canonical_primitive(const std::vector<LatticeVector>& vs) {
  std::set<std::vector<Int>> uniq;
  for (const auto& v : vs)
    if (!v.is_zero()) uniq.insert(primitive(v.coords));
  std::vector<LatticeVector> out;
  for (const auto& c : uniq) out.emplace_back(c, vs.at(0).ctx);
  return out;
}

std::vector<LatticeVector> cayley_generators(const MinkowskiDecomposition& dec,
                                             const LatticeContext& mbar) {
  std::vector<LatticeVector> gens;
  for (std::size_t i = 0; i < dec.summands.size(); ++i)
    for (const auto& v : dec.summands[i].lattice_vertices())
      gens.push_back(embed(v, mbar) + extension_unit(mbar, static_cast<int>(i)));
  return gens;
}

} // namespace

MinkowskiDecomposition make_decomposition(std::vector<Polytope> summands) {
  if (summands.empty()) throw SummandContextMismatch("no summands");
  const LatticeContext ctx = summands[0].ctx();
  for (const auto& s : summands) {
    if (!(s.ctx() == ctx)) throw SummandContextMismatch("summands in different lattices");
    if (!s.is_lattice()) throw SummandContextMismatch("summand is not a lattice polytope");
  }
  Polytope total = fold_minkowski(summands);
  if (!is_reflexive(total))
    throw NotReflexiveSum("the Minkowski sum of the summands is not reflexive");
  return {std::move(summands), std::move(total)};
}

MinkowskiDecomposition make_decomposition(std::vector<Polytope> summands,
                                          const Polytope& expected_total) {
  MinkowskiDecomposition dec = make_decomposition(std::move(summands));
  if (!(dec.total == expected_total))
    throw NotReflexiveSum("summands do not add up to the supplied total");
  return dec;
}

bool is_nef_partition(const MinkowskiDecomposition& dec) {
  for (const auto& s : dec.summands)
    if (!s.contains(zero_vector(dec.base_ctx()))) return false;
  return true;
}

NefPartition make_nef_partition(MinkowskiDecomposition dec) {
  if (!is_nef_partition(dec))
    throw NotNefPartition("a summand does not contain the origin");
  return {std::move(dec)};
}

LatticeContext mbar_ctx(const MinkowskiDecomposition& dec) {
  const LatticeContext& b = dec.base_ctx();
  return {b.rank_base, b.rank_extension + dec.k() + 1, b.side};
}

LatticeContext nbar_ctx(const MinkowskiDecomposition& dec) { return mbar_ctx(dec).dual(); }

LatticeContext mtilde_ctx(const MinkowskiDecomposition& dec) {
  const LatticeContext& b = dec.base_ctx();
  return {b.rank_base, b.rank_extension + dec.k(), b.side};
}

LatticeContext ntilde_ctx(const MinkowskiDecomposition& dec) { return mtilde_ctx(dec).dual(); }

CayleyData build_cayley(const MinkowskiDecomposition& dec) {
  if (dec.base_ctx().rank_extension != 0)
    throw SummandContextMismatch("Cayley construction expects an unextended base lattice");
  const int k = dec.k();
  const LatticeContext mbar = mbar_ctx(dec);
  const LatticeContext mtil = mtilde_ctx(dec);
  const LatticeContext ntil = ntilde_ctx(dec);

  CayleyData cd;
  cd.dec = dec;

  // (a) generators (v, r_i) over the summand vertices.
  std::vector<LatticeVector> gens_a = cayley_generators(dec, mbar);
  cd.cayley_cone = make_cone(gens_a, mbar);
  if (!(cd.cayley_cone.generators() == canonical_primitive(gens_a)))
    throw InternalError("Cayley cone: point generators are not minimal");

  // (b) homogenization of Conv(D_0, D_1+e_1, ...) pulled back through
  // (m, b_1..b_k, s) -> (m, s - sum b, b_1..b_k).
  Polytope hat0 = hat_zero(dec.summands, mtil);
  Cone over_hat = cone_over(hat0, 1);
  {
    const int n = mbar.total_rank();
    const int d = dec.base_ctx().rank_base;
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
    for (int i = 0; i < d; ++i) m[i][i] = 1;
    for (int j = 0; j < k; ++j) m[d][d + j] = -1; // alpha_0 = s - sum b_j
    m[d][d + k] = 1;
    for (int j = 0; j < k; ++j) m[d + 1 + j][d + j] = 1;
    AffineLatticeMap lambda_inv = AffineLatticeMap::linear(std::move(m), mbar, mbar);
    std::vector<LatticeVector> gens_b;
    for (const auto& g : over_hat.generators()) gens_b.push_back(apply_map(lambda_inv, g));
    if (!(make_cone(gens_b, mbar) == cd.cayley_cone))
      throw InternalError("Cayley cone: homogenization form disagrees");
  }

  // (c) cone over the joint convex hull of the shifted summands.
  {
    Polytope joint = hull(gens_a);
    std::vector<LatticeVector> gens_c = joint.lattice_vertices();
    if (!(make_cone(gens_c, mbar) == cd.cayley_cone))
      throw InternalError("Cayley cone: joint-hull form disagrees");
  }

  cd.gor = gorenstein_support(cd.cayley_cone);
  {
    LatticeVector expect_n = zero_vector(mbar.dual());
    LatticeVector expect_m = zero_vector(mbar);
    for (int i = 0; i <= k; ++i) {
      expect_n = expect_n + extension_unit(mbar.dual(), i);
      expect_m = expect_m + extension_unit(mbar, i);
    }
    if (!cd.gor.is_reflexive || !(cd.gor.support == expect_n) ||
        !(*cd.gor.dual_support == expect_m) || !(*cd.gor.index == Int(k + 1)))
      throw InternalError("Cayley cone is not reflexive Gorenstein of index k+1");
  }

  cd.cayley_dual_cone = dual_cone(cd.cayley_cone);

  cd.hat_delta.push_back(hat0);
  for (int i = 1; i <= k; ++i) cd.hat_delta.push_back(translate(hat0, -tilde_e(mtil, i)));
  for (int i = 0; i <= k; ++i)
    cd.tilde_delta.push_back(tilde_piece(dec.summands[i], i, mtil));
  cd.hat_nabla = hat_nabla_family(dec.summands, dec.total, ntil);

  cd.sum_hat_delta = fold_minkowski(cd.hat_delta);
  cd.sum_hat_nabla = fold_minkowski(cd.hat_nabla);
  cd.sum_tilde_delta = fold_minkowski(cd.tilde_delta);
  cd.uplus_hat_nabla = fold_uplus(cd.hat_nabla);
  cd.uplus_tilde_delta = fold_uplus(cd.tilde_delta);
  cd.delta_star = dual_polytope(dec.total);
  return cd;
}

Cone cayley_dual(const MinkowskiDecomposition& dec) {
  const int k = dec.k();
  const LatticeContext mbar = mbar_ctx(dec);
  const LatticeContext nbar = mbar.dual();
  Polytope star = dual_polytope(dec.total);

  std::vector<LatticeVector> gens;
  for (const auto& u : lattice_points(star)) {
    LatticeVector img = embed(u, nbar);
    for (int i = 0; i <= k; ++i)
      img = img - support_min_int(dec.summands[i], u) * extension_unit(nbar, i);
    gens.push_back(img);
  }
  for (int i = 0; i <= k; ++i) gens.push_back(extension_unit(nbar, i));

  Cone from_formula = make_cone(gens, nbar);
  Cone from_duality = dual_cone(make_cone(cayley_generators(dec, mbar), mbar));
  if (!(from_formula == from_duality))
    throw InternalError("explicit dual Cayley generators disagree with the dual cone");
  return from_formula;
}

std::vector<Polytope> hat_nabla(const MinkowskiDecomposition& dec) {
  return hat_nabla_family(dec.summands, dec.total, ntilde_ctx(dec));
}

NefPartition dual_nef_partition(const NefPartition& np) {
  const MinkowskiDecomposition& dec = np.dec;
  const LatticeContext ctx = dec.base_ctx();
  const LatticeContext dual_ctx = ctx.dual();
  const int k = dec.k();

  std::vector<Polytope> nabla;
  for (int j = 0; j <= k; ++j) {
    std::vector<HalfSpace> cuts;
    for (int i = 0; i <= k; ++i) {
      Rat delta = i == j ? 1 : 0;
      for (const auto& v : dec.summands[i].lattice_vertices()) {
        if (v.is_zero()) continue;
        cuts.push_back({v, delta});
      }
    }
    Polytope nj = polytope_from_halfspaces(cuts, dual_ctx);
    if (!nj.is_lattice())
      throw NonLatticeDual("dual nef-partition piece " + std::to_string(j) +
                           " has non-integral vertices");
    nabla.push_back(std::move(nj));
  }
  return make_nef_partition(make_decomposition(std::move(nabla)));
}

AffineLatticeMap phi_map(const MinkowskiDecomposition& dec) {
  const LatticeContext mtil = mtilde_ctx(dec);
  const int d = mtil.rank_base;
  const int k = mtil.rank_extension;
  const int n = mtil.total_rank();
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
  for (int i = 0; i < d; ++i) m[i][i] = k + 1;
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < k; ++i) m[d + i][d + j] = (i == j ? k + 1 : 0) - 1;
  return AffineLatticeMap::linear(std::move(m), mtil, mtil);
}

AffineLatticeMap phi_star_map(const MinkowskiDecomposition& dec) {
  AffineLatticeMap f = phi_map(dec);
  f.source = f.source.dual();
  f.target = f.target.dual();
  return f;
}

bool VerificationReport::all_pass() const {
  return std::all_of(items.begin(), items.end(),
                     [](const VerificationItem& i) { return i.pass; });
}

void VerificationReport::add(std::string name, bool pass, std::string detail) {
  items.push_back({std::move(name), pass, std::move(detail)});
}

namespace {

void run_item(VerificationReport& rep, const std::string& name,
              const std::function<bool()>& fn) {
  try {
    rep.add(name, fn());
  } catch (const std::exception& e) {
    rep.add(name, false, e.what());
  }
}

std::set<std::vector<Int>> point_set(const std::vector<LatticeVector>& vs) {
  std::set<std::vector<Int>> s;
  for (const auto& v : vs) s.insert(v.coords);
  return s;
}

} // namespace

VerificationReport verify_duality_web(const MinkowskiDecomposition& dec) {
  VerificationReport rep;
  const int k = dec.k();
  const LatticeContext mtil = mtilde_ctx(dec);
  const LatticeContext ntil = ntilde_ctx(dec);
  CayleyData cd = build_cayley(dec);

  // (a) (sum hat_delta)* agrees with the explicit generator formula.
  run_item(rep, "a_sum_hat_delta_dual", [&] {
    std::vector<LatticeVector> pts;
    for (const auto& u : lattice_points(cd.delta_star)) {
      LatticeVector img = embed(u, ntil);
      for (int i = 0; i <= k; ++i)
        img = img - support_min_int(dec.summands[i], u) * tilde_e(ntil, i);
      pts.push_back(img);
    }
    for (int i = 0; i <= k; ++i) pts.push_back(tilde_e(ntil, i));
    return dual_polytope(cd.sum_hat_delta) == hull(pts);
  });

  // (b) (sum hat_nabla)* = Conv(D_0 + e_0, ..., D_k + e_k).
  run_item(rep, "b_sum_hat_nabla_dual", [&] {
    std::vector<LatticeVector> pts;
    for (int i = 0; i <= k; ++i)
      for (const auto& v : dec.summands[i].lattice_vertices())
        pts.push_back(embed(v, mtil) + tilde_e(mtil, i));
    return dual_polytope(cd.sum_hat_nabla) == hull(pts);
  });

  // (c) convex-union dualities.
  run_item(rep, "c_uplus_hat_nabla_dual", [&] {
    return dual_polytope(cd.uplus_hat_nabla) == cd.sum_tilde_delta;
  });
  run_item(rep, "c_uplus_tilde_delta_dual", [&] {
    return dual_polytope(cd.uplus_tilde_delta) == cd.sum_hat_nabla;
  });

  // (d) the lattice isomorphisms between the two pictures.
  run_item(rep, "d_phi_onto_sum_hat_delta", [&] {
    return apply_map(phi_map(dec), cd.uplus_tilde_delta) == cd.sum_hat_delta;
  });
  run_item(rep, "d_phi_star_onto_uplus_tilde_dual", [&] {
    return apply_map(phi_star_map(dec), dual_polytope(cd.sum_hat_delta)) ==
           dual_polytope(cd.uplus_tilde_delta);
  });

  // (e) lattice-point census.
  const Int lstar = lattice_point_count(cd.delta_star);
  run_item(rep, "e_count_hat_nabla0", [&] {
    return lattice_point_count(cd.hat_nabla[0]) == lstar + k;
  });
  run_item(rep, "e_count_uplus_hat_nabla", [&] {
    return lattice_point_count(cd.uplus_hat_nabla) == Int(k + 1) * lstar + Int(k) * Int(k);
  });
  run_item(rep, "e_count_uplus_tilde_delta", [&] {
    // {0} and the shifted summand slices are disjoint once k >= 1; the
    // closed formula 1 + sum l(D_i) counts the origin twice at k = 0.
    std::set<std::vector<Int>> pts{zero_vector(mtil).coords};
    for (int i = 0; i <= k; ++i)
      for (const auto& x : lattice_points(dec.summands[i]))
        pts.insert((embed(x, mtil) + tilde_e(mtil, i)).coords);
    if (lattice_point_count(cd.uplus_tilde_delta) != Int(pts.size())) return false;
    if (k >= 1) {
      Int expect = 1;
      for (const auto& s : dec.summands) expect += lattice_point_count(s);
      if (lattice_point_count(cd.uplus_tilde_delta) != expect) return false;
    }
    return true;
  });
  run_item(rep, "e_lattice_point_sets", [&] {
    std::vector<LatticeVector> hn0;
    for (const auto& u : lattice_points(cd.delta_star)) {
      LatticeVector img = embed(u, ntil);
      for (int i = 1; i <= k; ++i)
        img = img - support_min_int(dec.summands[i], u) * tilde_e(ntil, i);
      hn0.push_back(img);
    }
    for (int i = 1; i <= k; ++i) hn0.push_back(tilde_e(ntil, i));
    if (point_set(lattice_points(cd.hat_nabla[0])) != point_set(hn0)) return false;

    std::vector<LatticeVector> td{zero_vector(mtil)};
    for (int i = 0; i <= k; ++i)
      for (const auto& x : lattice_points(dec.summands[i]))
        td.push_back(embed(x, mtil) + tilde_e(mtil, i));
    return point_set(lattice_points(cd.uplus_tilde_delta)) == point_set(td);
  });

  if (is_nef_partition(dec)) {
    NefPartition np{dec};
    run_item(rep, "f_dual_nef_involution", [&] {
      NefPartition nd = dual_nef_partition(np);
      NefPartition back = dual_nef_partition(nd);
      if (back.dec.summands.size() != dec.summands.size()) return false;
      for (std::size_t i = 0; i < dec.summands.size(); ++i)
        if (!(back.dec.summands[i] == dec.summands[i])) return false;
      return true;
    });
    run_item(rep, "f_bo_uplus_delta", [&] {
      NefPartition nd = dual_nef_partition(np);
      return dual_polytope(fold_uplus(dec.summands)) == nd.dec.total;
    });
    run_item(rep, "f_bo_uplus_nabla", [&] {
      NefPartition nd = dual_nef_partition(np);
      return dual_polytope(fold_uplus(nd.dec.summands)) == dec.total;
    });
    run_item(rep, "f_eight_polytope_web", [&] {
      NefPartition nd = dual_nef_partition(np);
      const auto& nab = nd.dec.summands;
      std::vector<Polytope> tilde_nabla;
      for (int i = 0; i <= k; ++i) tilde_nabla.push_back(tilde_piece(nab[i], i, ntil));
      Polytope what_nabla0 = hat_zero(nab, ntil);
      std::vector<Polytope> what_nabla{what_nabla0};
      for (int i = 1; i <= k; ++i)
        what_nabla.push_back(translate(what_nabla0, -tilde_e(ntil, i)));

      if (!(dual_polytope(cd.uplus_tilde_delta) == fold_minkowski(what_nabla))) return false;
      if (!(dual_polytope(fold_uplus(tilde_nabla)) == cd.sum_hat_delta)) return false;
      if (!(dual_polytope(fold_uplus(what_nabla)) == cd.sum_tilde_delta)) return false;
      if (!(dual_polytope(fold_uplus(cd.hat_delta)) == fold_minkowski(tilde_nabla)))
        return false;
      return true;
    });
    run_item(rep, "f_hat_nabla0_from_nabla", [&] {
      NefPartition nd = dual_nef_partition(np);
      return cd.hat_nabla[0] == hat_zero(nd.dec.summands, ntil);
    });
  }

  return rep;
}

} // namespace reflexkit
