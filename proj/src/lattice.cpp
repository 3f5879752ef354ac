#include "reflexkit/lattice.hpp"

#include <algorithm>

namespace reflexkit {

std::string to_string(const LatticeContext& ctx) {
  std::string s = ctx.side == Side::M ? "M" : "N";
  s += "(" + std::to_string(ctx.rank_base);
  if (ctx.rank_extension > 0) s += "+" + std::to_string(ctx.rank_extension);
  s += ")";
  return s;
}

LatticeVector::LatticeVector(std::vector<Int> c, LatticeContext k)
    : coords(std::move(c)), ctx(k) {
  if (static_cast<int>(coords.size()) != ctx.total_rank())
    throw RankMismatch("vector length " + std::to_string(coords.size()) +
                       " does not match context " + to_string(ctx));
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Int& x) { return x == 0; });
}

RationalVector::RationalVector(std::vector<Rat> c, LatticeContext k)
    : coords(std::move(c)), ctx(k) {
  if (static_cast<int>(coords.size()) != ctx.total_rank())
    throw RankMismatch("vector length " + std::to_string(coords.size()) +
                       " does not match context " + to_string(ctx));
}

RationalVector::RationalVector(const LatticeVector& v) : ctx(v.ctx) {
  coords.reserve(v.size());
  for (const Int& x : v.coords) coords.emplace_back(x);
}

bool RationalVector::is_integral() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const Rat& q) { return is_integer(q); });
}

LatticeVector RationalVector::to_lattice() const {
  std::vector<Int> c;
  c.reserve(coords.size());
  for (const Rat& q : coords) {
    if (!is_integer(q)) throw InternalError("to_lattice on non-integral vector");
    c.push_back(num(q));
  }
  return LatticeVector(std::move(c), ctx);
}

bool RationalVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rat& x) { return x == 0; });
}

bool lex_less(const LatticeVector& a, const LatticeVector& b) {
  return std::lexicographical_compare(a.coords.begin(), a.coords.end(),
                                      b.coords.begin(), b.coords.end());
}

bool lex_less(const RationalVector& a, const RationalVector& b) {
  return std::lexicographical_compare(a.coords.begin(), a.coords.end(),
                                      b.coords.begin(), b.coords.end());
}

namespace {
void require_same_ctx(const LatticeContext& a, const LatticeContext& b) {
  if (!(a == b))
    throw ContextMismatch(to_string(a) + " vs " + to_string(b));
}
} // namespace

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  require_same_ctx(a.ctx, b.ctx);
  std::vector<Int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return LatticeVector(std::move(c), a.ctx);
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
  require_same_ctx(a.ctx, b.ctx);
  std::vector<Int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return LatticeVector(std::move(c), a.ctx);
}

LatticeVector operator-(const LatticeVector& a) {
  std::vector<Int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return LatticeVector(std::move(c), a.ctx);
}

LatticeVector operator*(const Int& c, const LatticeVector& a) {
  std::vector<Int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return LatticeVector(std::move(r), a.ctx);
}

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
  require_same_ctx(a.ctx, b.ctx);
  std::vector<Rat> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return RationalVector(std::move(c), a.ctx);
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
  require_same_ctx(a.ctx, b.ctx);
  std::vector<Rat> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return RationalVector(std::move(c), a.ctx);
}

RationalVector operator*(const Rat& c, const RationalVector& a) {
  std::vector<Rat> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return RationalVector(std::move(r), a.ctx);
}

LatticeVector zero_vector(const LatticeContext& ctx) {
  return LatticeVector(std::vector<Int>(ctx.total_rank(), 0), ctx);
}

LatticeVector unit_vector(const LatticeContext& ctx, int i) {
  if (i < 0 || i >= ctx.total_rank())
    throw RankMismatch("unit_vector index " + std::to_string(i));
  std::vector<Int> c(ctx.total_rank(), 0);
  c[i] = 1;
  return LatticeVector(std::move(c), ctx);
}

LatticeVector extension_unit(const LatticeContext& ctx, int offset) {
  if (offset < 0 || offset >= ctx.rank_extension)
    throw RankMismatch("extension offset " + std::to_string(offset) + " in " +
                       to_string(ctx));
  return unit_vector(ctx, ctx.rank_base + offset);
}

LatticeVector extension_e0(const LatticeContext& ctx) {
  LatticeVector v = zero_vector(ctx);
  for (int i = 0; i < ctx.rank_extension; ++i) v[ctx.rank_base + i] = -1;
  return v;
}

Int pairing(const LatticeVector& m, const LatticeVector& n) {
  if (!(m.ctx == n.ctx.dual()))
    throw ContextMismatch("pairing of " + to_string(m.ctx) + " with " + to_string(n.ctx));
  Int s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += m[i] * n[i];
  return s;
}

Rat pairing(const RationalVector& m, const LatticeVector& n) {
  if (!(m.ctx == n.ctx.dual()))
    throw ContextMismatch("pairing of " + to_string(m.ctx) + " with " + to_string(n.ctx));
  Rat s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += m[i] * n[i];
  return s;
}

Rat pairing(const LatticeVector& m, const RationalVector& n) { return pairing(n, m); }

AffineLatticeMap AffineLatticeMap::identity(const LatticeContext& ctx) {
  int n = ctx.total_rank();
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return {std::move(m), std::vector<Int>(n, 0), ctx, ctx};
}

AffineLatticeMap AffineLatticeMap::linear(std::vector<std::vector<Int>> m,
                                          LatticeContext src, LatticeContext tgt) {
  return {std::move(m), std::vector<Int>(tgt.total_rank(), 0), src, tgt};
}

LatticeVector apply_map(const AffineLatticeMap& f, const LatticeVector& x) {
  if (!(x.ctx == f.source))
    throw RankMismatch("map source " + to_string(f.source) + ", argument " +
                       to_string(x.ctx));
  std::vector<Int> y(f.matrix.size());
  for (std::size_t i = 0; i < f.matrix.size(); ++i) {
    Int s = f.translation[i];
    for (std::size_t j = 0; j < x.size(); ++j) s += f.matrix[i][j] * x[j];
    y[i] = s;
  }
  return LatticeVector(std::move(y), f.target);
}

RationalVector apply_map(const AffineLatticeMap& f, const RationalVector& x) {
  if (!(x.ctx == f.source))
    throw RankMismatch("map source " + to_string(f.source) + ", argument " +
                       to_string(x.ctx));
  std::vector<Rat> y(f.matrix.size());
  for (std::size_t i = 0; i < f.matrix.size(); ++i) {
    Rat s = f.translation[i];
    for (std::size_t j = 0; j < x.size(); ++j) s += f.matrix[i][j] * x[j];
    y[i] = s;
  }
  return RationalVector(std::move(y), f.target);
}

AffineLatticeMap compose(const AffineLatticeMap& g, const AffineLatticeMap& f) {
  if (!(f.target == g.source))
    throw RankMismatch("compose: inner target " + to_string(f.target) +
                       ", outer source " + to_string(g.source));
  int rows = static_cast<int>(g.matrix.size());
  int mid = static_cast<int>(f.matrix.size());
  int cols = mid > 0 ? static_cast<int>(f.matrix[0].size()) : 0;
  std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols, 0));
  std::vector<Int> t(rows, 0);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j)
      for (int l = 0; l < mid; ++l) m[i][j] += g.matrix[i][l] * f.matrix[l][j];
    Int s = g.translation[i];
    for (int l = 0; l < mid; ++l) s += g.matrix[i][l] * f.translation[l];
    t[i] = s;
  }
  return {std::move(m), std::move(t), f.source, g.target};
}

} // namespace reflexkit
