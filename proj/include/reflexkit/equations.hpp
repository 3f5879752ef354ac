#ifndef REFLEXKIT_EQUATIONS_HPP
#define REFLEXKIT_EQUATIONS_HPP

#include "reflexkit/cayley.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace reflexkit {

/// Named coefficient symbol; identity is (tag, indices).  Lattice-point
/// indices are flattened into the index tuple.
struct CoefficientSymbol {
  enum class Tag { unit, a_n, a_im, a_ij, a_in, lambda_in, b_n };

  Tag tag = Tag::unit;
  std::vector<long long> indices;
  std::optional<Rat> specialization;

  friend bool operator==(const CoefficientSymbol& a, const CoefficientSymbol& b) {
    return a.tag == b.tag && a.indices == b.indices;
  }
  friend bool operator<(const CoefficientSymbol& a, const CoefficientSymbol& b) {
    if (a.tag != b.tag) return a.tag < b.tag;
    return a.indices < b.indices;
  }
};

std::string to_string(const CoefficientSymbol& s);

CoefficientSymbol sym_unit();
CoefficientSymbol sym_a(const LatticeVector& n);
CoefficientSymbol sym_a(int i, const LatticeVector& m);
CoefficientSymbol sym_a(int i, int j);
CoefficientSymbol sym_a_boundary(int i, const LatticeVector& n);
CoefficientSymbol sym_lambda(int i, const LatticeVector& n);
CoefficientSymbol sym_b(const LatticeVector& m);

/// Product of symbol powers; exponents may be negative for designated
/// invertible symbols.
struct SymMonomial {
  std::vector<std::pair<CoefficientSymbol, int>> factors; // sorted, no zeros

  friend bool operator==(const SymMonomial&, const SymMonomial&) = default;
  friend bool operator<(const SymMonomial& a, const SymMonomial& b) {
    return a.factors < b.factors;
  }
};

/// Exact polynomial expression in the coefficient symbols.
class SymExpr {
public:
  SymExpr() = default;
  static SymExpr constant(const Rat& c);
  static SymExpr symbol(const CoefficientSymbol& s, int power = 1);

  const std::map<SymMonomial, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  SymExpr& operator+=(const SymExpr& o);
  SymExpr& operator-=(const SymExpr& o);
  friend SymExpr operator+(SymExpr a, const SymExpr& b) { return a += b; }
  friend SymExpr operator-(SymExpr a, const SymExpr& b) { return a -= b; }
  friend SymExpr operator*(const SymExpr& a, const SymExpr& b);
  friend bool operator==(const SymExpr&, const SymExpr&) = default;

  /// Replace each non-unit symbol by an expression (absent = keep).
  SymExpr substituted(const std::map<CoefficientSymbol, SymExpr>& subst) const;

private:
  std::map<SymMonomial, Rat> terms_;
};

std::string to_string(const SymExpr& e);

/// Homogeneous-coordinate variables: one per ray of the relevant fan.
struct RaySet {
  enum class Mode { VerticesOnly, AllBoundaryLatticePoints };

  LatticeContext ctx;
  std::vector<LatticeVector> rays; // distinct, primitive, lex order
  Mode mode = Mode::VerticesOnly;

  std::size_t size() const { return rays.size(); }
};

/// Rays of the face fan of P (vertices) or of its maximal crepant
/// refinement (all boundary lattice points).
RaySet ray_set(const Polytope& p, RaySet::Mode mode);

/// Exponent vector over a ray set (dense; zero exponents implicit in the
/// serialized form).
struct Monomial {
  std::vector<Int> exponents;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.exponents < b.exponents;
  }
};

/// x^m dressed to degree b: exponents b_rho + <m, v_rho>, all >= 0.
Monomial monomial_of_point(const LatticeVector& m, const std::vector<Int>& b,
                           const RaySet& rays);

/// b_rho = 1 if the ray lies in the face F, else 0.
std::vector<Int> incidence_degrees(const RaySet& rays, const Polytope& face);

struct Term {
  Monomial monomial;
  SymExpr coeff;
};

struct PolynomialSystem {
  RaySet rays;
  std::vector<std::vector<Term>> equations; // terms sorted by monomial

  /// Every pair of monomials in one equation differs by (<m, v_rho>)_rho
  /// for an integral m.
  bool is_graded() const;
};

bool same_system(const PolynomialSystem& a, const PolynomialSystem& b);

/// Applies a symbol substitution and drops vanished terms; terms whose
/// monomials collide are combined.
PolynomialSystem substitute(const PolynomialSystem& sys,
                            const std::map<CoefficientSymbol, SymExpr>& subst);

/// sum_{n in L(delta_star)} a_n x^n prod x_rho over the rays of the face
/// fan of the dual polytope (anticanonical degree).
PolynomialSystem hypersurface_equation(const Polytope& delta_star, const RaySet& rays);

/// The k binomial equations cutting out the embedded toric variety:
/// prod_{v in D_i + e_i} x_v - prod_{v in D_0 + e_0} x_v.
PolynomialSystem toric_binomial_equations(const CayleyData& cd, const RaySet& rays);

/// The k-equation embedded deformation family with parameters
/// lambda_{i,n}, n a nonzero lattice point of the dual polytope.
PolynomialSystem deformation_family_equations(const CayleyData& cd, const RaySet& rays);

/// Lattice-point/coefficient pairs in the dual Cayley cone.
struct GorensteinTerm {
  LatticeVector point;
  SymExpr coeff;
};

struct GorensteinSystem {
  std::vector<std::vector<GorensteinTerm>> equations;
};

struct EmbeddedSystem {
  PolynomialSystem homogeneous;
  GorensteinSystem gorenstein;
};

/// The hypersurface equation transported into the bigger toric variety:
/// the a_n-equation together with the k binomials, in both homogeneous
/// and Gorenstein-ring form.
EmbeddedSystem embedded_ci_equations(const CayleyData& cd, const RaySet& rays);

/// The graded-ring correspondence on points of the dual Cayley cone:
/// chi^{(u, a_0..a_k)} -> x^{u + sum_{j>=1} a_j e_j*} (prod_{v in D_0+e_0}
/// x_v)^{sum a_j}.
Monomial monomial_of_gorenstein_point(const CayleyData& cd, const RaySet& rays,
                                      const LatticeVector& point);

/// Generic complete intersection for the hat-nabla nef-partition;
/// equation i is supported on the lattice points of hat-nabla_i.
PolynomialSystem generic_ci_equations_nabla(const CayleyData& cd, const RaySet& rays);

/// Substitution sending the generic system to the embedded one.
std::map<CoefficientSymbol, SymExpr> nabla_degeneration_substitution(const CayleyData& cd);

/// Mirror-side complete intersection over the rays of the convex union
/// of the hat-nabla family: (1 - sum_m a_{i,m} x^{m+e_i}) prod_{v in
/// hat-nabla_i} x_v.
PolynomialSystem mirror_ci_equations_tilde(const CayleyData& cd, const RaySet& rays);

/// Exact Laurent polynomial over a lattice with symbolic coefficients.
struct LaurentPoly {
  LatticeContext ctx;
  std::map<std::vector<Int>, SymExpr> terms;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
};

LaurentPoly laurent_one(const LatticeContext& ctx);
LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_sub(const LaurentPoly& a, const LaurentPoly& b);

struct MirrorImage {
  PolynomialSystem system; // one equation over the rays of the dual polytope
  LaurentPoly g_delta;     // 1 - prod_i (sum_{m in D_i} a_{i,m} t^m), over the base lattice
};

/// Expansion of the contracted hypersurface 1 - prod_i f_i, with every
/// exponent checked to lie in the total polytope.
MirrorImage mirror_image_hypersurface(const MinkowskiDecomposition& dec,
                                      const RaySet& rays);

/// Verifies the elimination identity: the contracted hypersurface
/// polynomial lies in the ideal of the k+1 affine equations, via the
/// exact telescoping cofactors.  The identity is a finite polynomial
/// statement, so `degree_bound` only guards against misuse (< 0).
bool elimination_check(const CayleyData& cd, int degree_bound);

} // namespace reflexkit

#endif
