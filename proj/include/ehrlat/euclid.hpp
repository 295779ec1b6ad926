#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ehrlat/matrix.hpp"
#include "ehrlat/rational.hpp"

namespace ehrlat {

/// gcd(a,b) read off the lattice: the segment from 0 to (a,b) carries g+1
/// lattice points, and the closest lattice point (p,q) below the line through
/// the primitive direction gives the extended-Euclid coefficients.
struct GcdCertificate {
  Int a, b, g;
  Int segment_points;          // g + 1
  std::pair<Int, Int> closest;  // (p, q) with b/g * p - a/g * q = 1, 0 <= p < a/g
  std::pair<Int, Int> bezout;   // (s, t) = (-q, p); s*a + t*b = g
};

GcdCertificate gcd_certificate(const Int& a, const Int& b);

/// Stern-Brocot tree embedded in the plane: each node is the center v1 + v2 of
/// its basis, the two children replace one basis vector by the center.
struct SternBrocotTree {
  struct Node {
    Int x, y;
    int parent;  // index into nodes, -1 for the root
  };
  std::vector<Node> nodes;  // breadth-first order
};

SternBrocotTree stern_brocot_embedding(int depth);

/// Decomposition of the lattice triangle (0,0), (a,0), (a,b) into sheared
/// translates of simple triangles T_{c,c} with vertices (0,0), (c,0), (c,c).
/// Every piece except the last is half-open (diagonal edge excluded); the last
/// piece is closed and carries the points on the segment to (a,b).
struct StaircasePiece {
  IntVec offset;        // 2 entries
  Int size;             // c
  IntMatrix transform;  // unimodular 2x2, piece = offset + transform * T_{c,c}
};

struct StaircaseDecomposition {
  Int a, b;
  std::vector<StaircasePiece> pieces;
};

StaircaseDecomposition staircase_decomposition(const Int& a, const Int& b);

/// Lattice points of one piece, mapped to the ambient triangle.
std::vector<IntVec> staircase_piece_points(const StaircasePiece& piece, bool closed);

enum class PlotKind { GcdRays, SternBrocot, Staircase };

struct PlotParams {
  int bound = 10;  // gcd rays
  int depth = 3;   // stern-brocot
  Int a = 1, b = 1;  // staircase
};

/// Writes <base>.svg and <base>.csv; returns both paths.
std::pair<std::string, std::string> emit_plot(PlotKind kind, const PlotParams& params,
                                              const std::string& base);

}  // namespace ehrlat
