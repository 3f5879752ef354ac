#ifndef REFLEXKIT_LINALG_HPP
#define REFLEXKIT_LINALG_HPP

#include "reflexkit/numbers.hpp"

#include <optional>
#include <vector>

namespace reflexkit {

// Exact dense linear algebra over Q at the small sizes this toolkit
// needs (rank <= ~10).  Matrices are row vectors.
using RatMatrix = std::vector<std::vector<Rat>>;

RatMatrix to_rational(const std::vector<std::vector<Int>>& m);

int rank(RatMatrix m);

/// Reduced row echelon form (unique); zero rows dropped.
RatMatrix rref(RatMatrix m);

/// One solution x of A x = b, if consistent.
std::optional<std::vector<Rat>> solve(const RatMatrix& a, const std::vector<Rat>& b);

/// Basis of the null space {x : A x = 0}, from the RREF free columns,
/// so the result is canonical for a given row space.
std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& a);

/// kernel_basis scaled to primitive integer vectors.
std::vector<std::vector<Int>> integer_kernel_basis(const std::vector<std::vector<Int>>& a);

std::vector<Rat> mat_vec(const RatMatrix& a, const std::vector<Rat>& x);
Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b);

} // namespace reflexkit

#endif
