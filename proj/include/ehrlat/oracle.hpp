#pragma once

#include <vector>

#include "ehrlat/polyhedron.hpp"

namespace ehrlat {

struct BoundingBox {
  IntVec lo, hi;  // per-coordinate inclusive bounds
};

/// Integer box enclosing a bounded polyhedron, from its closure vertices.
BoundingBox bounding_box(const Polyhedron& p);
BoundingBox bounding_box(const PartialComplex& pc);

/// All integer points of the region inside the box, by direct membership
/// evaluation of every constraint. Lexicographic order. Complex membership is
/// positive net multiplicity. Candidate count capped at 10^7.
std::vector<IntVec> enumerate_points(const Polyhedron& p, const BoundingBox& box);
std::vector<IntVec> enumerate_points(const PartialComplex& pc, const BoundingBox& box);

Int count_dilate(const Polyhedron& p, const Int& k);
Int count_dilate(const PartialComplex& pc, const Int& k);
Int count_interior(const Polyhedron& p, const Int& k);

}  // namespace ehrlat
