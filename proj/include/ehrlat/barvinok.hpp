#pragma once

#include <vector>

#include "ehrlat/cones.hpp"
#include "ehrlat/polyhedron.hpp"

namespace ehrlat {

struct SignedCone {
  int sign = 1;
  HalfOpenCone cone;
};

using SignedConeList = std::vector<SignedCone>;

/// Placing triangulation of a pointed cone into half-open simplicial cells
/// (apex 0, all signs +1, pairwise disjoint, union = input cone).
SignedConeList triangulate_cone(const std::vector<IntVec>& generators);

/// Triangulated vertex cones of a bounded nonempty polyhedron; the sum of
/// their indicator generating functions equals that of P modulo lines.
SignedConeList brion(const Polyhedron& p);

struct DecompositionStats {
  long leaves = 0;
  int max_depth = 0;
};

/// Signed decomposition into half-open cones of index <= target_index
/// (unimodular by default). The signed membership identity holds at every
/// lattice point.
SignedConeList barvinok_decompose(const HalfOpenCone& c, const Int& target_index = 1,
                                  DecompositionStats* stats = nullptr);

/// Internal form used by the generating-function pipeline: decomposition of a
/// full-rank simplicial cone given the generic apex-shift direction s (the
/// half-open structure of each leaf is sign(V_leaf^{-1} s) > 0). Returns
/// nullopt when s lies on a facet hyperplane of some intermediate cone;
/// callers regenerate s.
struct SignedGens {
  int sign;
  std::vector<IntVec> generators;
};
std::optional<std::vector<SignedGens>> decompose_with_direction(
    const std::vector<IntVec>& generators, const IntVec& s, const Int& target_index,
    DecompositionStats* stats);

}  // namespace ehrlat
