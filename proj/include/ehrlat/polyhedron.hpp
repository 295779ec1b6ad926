#pragma once

#include <vector>

#include "ehrlat/matrix.hpp"
#include "ehrlat/rational.hpp"

namespace ehrlat {

/// One linear condition b + a.x >= 0 (strict: > 0), or b + a.x = 0 when used
/// as an equation.
struct LinRow {
  Rat b;
  RatVec a;
  bool strict = false;
};

/// Rational polyhedron {x : rows hold}, possibly half-open via strict rows.
struct Polyhedron {
  int dim = 0;
  std::vector<LinRow> inequalities;
  std::vector<LinRow> equations;
};

struct SignedPiece {
  int sign = 1;  // +1 or -1
  Polyhedron piece;
};

/// Signed list of half-open pieces; with all signs +1 the pieces are
/// pairwise disjoint.
using PartialComplex = std::vector<SignedPiece>;

struct Vertex {
  RatVec point;
  /// Primitive integer directions of the incident edges, oriented away from
  /// the vertex; sorted lexicographically.
  std::vector<IntVec> edge_dirs;
};

struct VertexSet {
  std::vector<Vertex> vertices;
};

/// Data of the cone over P x {1}: apex 0, integral generators ell*(w_i, 1)
/// with ell the lcm of all vertex-coordinate denominators.
struct ConeOverData {
  std::vector<IntVec> generators;
  Int ell;
};

Rat row_value(const LinRow& row, const RatVec& x);
bool row_holds(const LinRow& row, const RatVec& x, bool as_equation);
bool contains(const Polyhedron& p, const RatVec& x);

Polyhedron closure(const Polyhedron& p);
Polyhedron dilate(const Polyhedron& p, const Int& k);
Polyhedron relative_interior(const Polyhedron& p);

bool is_empty(const Polyhedron& p);
bool is_bounded(const Polyhedron& p);

/// Vertices of the closure of a bounded nonempty polyhedron, with incident
/// edge directions. Deterministic lexicographic order.
VertexSet vertices(const Polyhedron& p);

ConeOverData cone_over(const Polyhedron& p);

/// Dimension of the affine hull (-1 for empty input not allowed here; P must
/// be bounded and nonempty).
int affine_dimension(const Polyhedron& p);

/// lcm of the denominators of all vertex coordinates of the closure.
Int vertex_denominator_lcm(const Polyhedron& p);

/// Exact Fourier-Motzkin feasibility of a mixed system over the rationals.
bool fm_feasible(int dim, const std::vector<LinRow>& inequalities,
                 const std::vector<LinRow>& equations);

// -- half-open (perturbed) vertex data -------------------------------------
//
// A strict row b + a.x > 0 is treated as b - eps + a.x >= 0 for a symbolic
// infinitesimal eps > 0. Vertices of the perturbed polytope are affine in
// eps: v = point0 + eps * point1. Edge directions are exact integer vectors.

struct PerturbedVertex {
  RatVec point0;
  RatVec point1;
  std::vector<IntVec> edge_dirs;
};

/// Vertices of the eps-perturbed polytope of a (possibly half-open) bounded
/// nonempty polyhedron. For closed input this coincides with vertices().
std::vector<PerturbedVertex> perturbed_vertices(const Polyhedron& p);

/// Perturbed vertices of a line-free nonempty polyhedron, possibly unbounded,
/// with edge_dirs holding the extreme rays of each tangent cone. For bounded
/// input this agrees with perturbed_vertices().
std::vector<PerturbedVertex> tangent_cones(const Polyhedron& p);

}  // namespace ehrlat
