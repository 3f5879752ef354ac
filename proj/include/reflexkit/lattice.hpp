#ifndef REFLEXKIT_LATTICE_HPP
#define REFLEXKIT_LATTICE_HPP

#include "reflexkit/errors.hpp"
#include "reflexkit/numbers.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace reflexkit {

/// Which of the two dual lattices a value lives in. The convention
/// throughout: polytopes of monomial exponents live on the M side, fans
/// and dual polytopes on the N side.
enum class Side { M, N };

inline Side opposite(Side s) { return s == Side::M ? Side::N : Side::M; }

/// A lattice M (+) Z^e or N (+) Z^e.  The extension block carries the
/// distinguished unit vectors e_1..e_k (or r_0..r_k when e = k+1); the
/// derived vectors e_0 = -sum e_i and e_0* = -sum e_i* are computed on
/// demand, never stored.
struct LatticeContext {
  int rank_base = 0;
  int rank_extension = 0;
  Side side = Side::M;

  int total_rank() const { return rank_base + rank_extension; }
  LatticeContext dual() const { return {rank_base, rank_extension, opposite(side)}; }

  friend bool operator==(const LatticeContext&, const LatticeContext&) = default;
};

std::string to_string(const LatticeContext& ctx);

struct LatticeVector {
  std::vector<Int> coords;
  LatticeContext ctx;

  LatticeVector() = default;
  LatticeVector(std::vector<Int> c, LatticeContext k);

  std::size_t size() const { return coords.size(); }
  const Int& operator[](std::size_t i) const { return coords[i]; }
  Int& operator[](std::size_t i) { return coords[i]; }
  bool is_zero() const;

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
};

struct RationalVector {
  std::vector<Rat> coords;
  LatticeContext ctx;

  RationalVector() = default;
  RationalVector(std::vector<Rat> c, LatticeContext k);
  /// Integer vector viewed rationally.
  explicit RationalVector(const LatticeVector& v);

  std::size_t size() const { return coords.size(); }
  const Rat& operator[](std::size_t i) const { return coords[i]; }
  Rat& operator[](std::size_t i) { return coords[i]; }
  bool is_integral() const;
  /// Requires is_integral().
  LatticeVector to_lattice() const;
  bool is_zero() const;

  friend bool operator==(const RationalVector&, const RationalVector&) = default;
};

/// Lexicographic coordinate order; used for every canonical ordering in
/// the toolkit so emitted sets are reproducible.
bool lex_less(const LatticeVector& a, const LatticeVector& b);
bool lex_less(const RationalVector& a, const RationalVector& b);

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a);
LatticeVector operator*(const Int& c, const LatticeVector& a);
RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator*(const Rat& c, const RationalVector& a);

LatticeVector zero_vector(const LatticeContext& ctx);
/// i-th unit vector of the whole coordinate block, 0-based.
LatticeVector unit_vector(const LatticeContext& ctx, int i);
/// i-th unit vector of the extension block, with the paper's 1-based
/// numbering e_1..e_k (or for (k+1)-extensions, 0-based r_0..r_k; pass
/// `i` as the extension-block offset).
LatticeVector extension_unit(const LatticeContext& ctx, int offset);
/// e_0 = -(e_1 + ... + e_k); only defined for k-extensions.
LatticeVector extension_e0(const LatticeContext& ctx);

/// <m, n> in the distinguished dual bases; contexts must be dual pairs.
Int pairing(const LatticeVector& m, const LatticeVector& n);
Rat pairing(const RationalVector& m, const LatticeVector& n);
Rat pairing(const LatticeVector& m, const RationalVector& n);

/// x |-> A x + t with exact integer entries.  Carries source and target
/// contexts so compositions and applications are checked.
struct AffineLatticeMap {
  std::vector<std::vector<Int>> matrix; // target_rank x source_rank
  std::vector<Int> translation;         // target_rank
  LatticeContext source;
  LatticeContext target;

  static AffineLatticeMap identity(const LatticeContext& ctx);
  static AffineLatticeMap linear(std::vector<std::vector<Int>> m, LatticeContext src,
                                 LatticeContext tgt);
};

LatticeVector apply_map(const AffineLatticeMap& f, const LatticeVector& x);
RationalVector apply_map(const AffineLatticeMap& f, const RationalVector& x);
/// g after f.
AffineLatticeMap compose(const AffineLatticeMap& g, const AffineLatticeMap& f);

} // namespace reflexkit

#endif
