#pragma once

#include <map>
#include <vector>

#include "ehrlat/matrix.hpp"
#include "ehrlat/rational.hpp"

namespace ehrlat {

/// Half-open simplicial cone apex + cone(generators). open_flags[i] true means
/// the facet spanned by the generators other than i is excluded, i.e. the
/// coefficient of generator i must be strictly positive.
struct HalfOpenCone {
  RatVec apex;
  std::vector<IntVec> generators;
  std::vector<bool> open_flags;  // empty = all closed
};

struct ParallelepipedPoints {
  std::vector<IntVec> points;  // sorted lexicographically
};

/// |det(generators)| for a full-dimensional cone.
Int index(const HalfOpenCone& c);

/// Integer points of the apex-shifted fundamental parallelepiped, honoring
/// open_flags.
ParallelepipedPoints parallelepiped_points(const HalfOpenCone& c);

/// Histogram of last coordinates.
std::map<Int, Int> heights(const ParallelepipedPoints& pp);

/// Real-cone membership of a lattice point (coefficients nonnegative, strictly
/// positive on flagged generators).
bool cone_contains(const HalfOpenCone& c, const IntVec& x);

// -- perturbed apex core ----------------------------------------------------
//
// Scalar v + e*eps + d*delta with eps >> delta > 0 infinitesimal. eps carries
// strict-inequality shifts of half-open polytopes, delta the generic facet
// assignment of triangulations and signed decompositions. Ordering is
// lexicographic in (v, e, d).

struct Pert {
  Rat v, e, d;

  Pert() : v(0), e(0), d(0) {}
  explicit Pert(Rat value) : v(std::move(value)), e(0), d(0) {}
  Pert(Rat value, Rat eps, Rat delta)
      : v(std::move(value)), e(std::move(eps)), d(std::move(delta)) {}

  Pert& operator+=(const Pert& o) {
    v += o.v;
    e += o.e;
    d += o.d;
    return *this;
  }
  Pert& operator-=(const Pert& o) {
    v -= o.v;
    e -= o.e;
    d -= o.d;
    return *this;
  }
  friend Pert operator+(Pert a, const Pert& b) { return a += b; }
  friend Pert operator-(Pert a, const Pert& b) { return a -= b; }
  friend Pert operator*(const Rat& s, const Pert& a) {
    return Pert(s * a.v, s * a.e, s * a.d);
  }
  friend bool operator==(const Pert& a, const Pert& b) {
    return a.v == b.v && a.e == b.e && a.d == b.d;
  }
  friend bool operator<(const Pert& a, const Pert& b) {
    if (a.v != b.v) return a.v < b.v;
    if (a.e != b.e) return a.e < b.e;
    return a.d < b.d;
  }
  bool is_rational() const { return e == 0 && d == 0; }
};

using PertVec = std::vector<Pert>;

Int pert_floor(const Pert& p);

/// Integer points x with V^{-1}(x - apex) in [0,1)^d (lexicographic order on
/// perturbed coordinates). Generators may span a lower-dimensional sublattice;
/// SNF saturation coordinates handle that case. Result sorted.
std::vector<IntVec> parallelepiped_points_at(const std::vector<IntVec>& generators,
                                             const PertVec& apex);

}  // namespace ehrlat
