#ifndef REFLEXKIT_RAYCORE_HPP
#define REFLEXKIT_RAYCORE_HPP

#include "reflexkit/numbers.hpp"

#include <vector>

namespace reflexkit {

/// Minimal description of the solution cone {y : <h, y> >= 0 for all h}:
/// a lineality-space basis plus the extreme rays of a pointed
/// complement.  The cone is generated by rays together with +/- the
/// lineality basis.
struct RayDescription {
  std::vector<std::vector<Int>> lineality; // canonical primitive basis
  std::vector<std::vector<Int>> rays;      // primitive, lex sorted
};

/// Exhaustive exact ray enumeration: candidate rays are kernels of
/// (r-1)-subsets of the inequality normals restricted to a pointed
/// coordinate complement of the lineality space.  Sound and complete for
/// the small systems this toolkit meets (<= ~30 inequalities, rank <= 8).
RayDescription extreme_rays(const std::vector<std::vector<Int>>& inequality_normals,
                            int ambient_rank);

} // namespace reflexkit

#endif
