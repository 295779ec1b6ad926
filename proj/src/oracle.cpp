#include "ehrlat/oracle.hpp"

namespace ehrlat {

namespace {

constexpr long kCandidateCap = 10000000;

BoundingBox empty_box(int dim) {
  BoundingBox box;
  box.lo.assign(dim, Int(0));
  box.hi.assign(dim, Int(-1));
  return box;
}

void absorb(BoundingBox& box, const Polyhedron& p, bool& seen) {
  if (is_empty(p)) return;
  for (const auto& v : vertices(p).vertices) {
    for (size_t i = 0; i < v.point.size(); ++i) {
      Int lo = rat_floor(v.point[i]), hi = rat_ceil(v.point[i]);
      if (!seen || lo < box.lo[i]) box.lo[i] = lo;
      if (!seen || hi > box.hi[i]) box.hi[i] = hi;
    }
    seen = true;
  }
}

/// Runs fn over every integer point of the box in lexicographic order.
template <typename Fn>
void scan_box(const BoundingBox& box, Fn fn) {
  if (box.lo.size() != box.hi.size())
    throw DimensionError("enumerate_points: box bounds disagree");
  int dim = int(box.lo.size());
  Int candidates = 1;
  for (int i = 0; i < dim; ++i) {
    if (box.hi[i] < box.lo[i]) return;
    candidates *= box.hi[i] - box.lo[i] + 1;
    if (candidates > kCandidateCap)
      throw ResourceError("enumerate_points: box exceeds candidate cap");
  }
  RatVec x(dim);
  for (int i = 0; i < dim; ++i) x[i] = box.lo[i];
  while (true) {
    fn(x);
    int i = dim - 1;
    while (i >= 0 && x[i] == box.hi[i]) {
      x[i] = box.lo[i];
      --i;
    }
    if (i < 0) break;
    x[i] += 1;
  }
}

IntVec to_int_vec(const RatVec& x) {
  IntVec v(x.size());
  for (size_t i = 0; i < x.size(); ++i) v[i] = x[i].get_num();
  return v;
}

}  // namespace

BoundingBox bounding_box(const Polyhedron& p) {
  BoundingBox box = empty_box(p.dim);
  bool seen = false;
  absorb(box, p, seen);
  return box;
}

BoundingBox bounding_box(const PartialComplex& pc) {
  int dim = pc.empty() ? 0 : pc.front().piece.dim;
  BoundingBox box = empty_box(dim);
  bool seen = false;
  for (const auto& sp : pc) absorb(box, sp.piece, seen);
  return box;
}

std::vector<IntVec> enumerate_points(const Polyhedron& p, const BoundingBox& box) {
  std::vector<IntVec> pts;
  scan_box(box, [&](const RatVec& x) {
    if (contains(p, x)) pts.push_back(to_int_vec(x));
  });
  return pts;
}

std::vector<IntVec> enumerate_points(const PartialComplex& pc, const BoundingBox& box) {
  std::vector<IntVec> pts;
  scan_box(box, [&](const RatVec& x) {
    int mult = 0;
    for (const auto& sp : pc)
      if (contains(sp.piece, x)) mult += sp.sign;
    if (mult > 0) pts.push_back(to_int_vec(x));
  });
  return pts;
}

Int count_dilate(const Polyhedron& p, const Int& k) {
  if (k < 1) throw DomainError("count_dilate: dilation must be positive");
  Polyhedron d = dilate(p, k);
  return Int(enumerate_points(d, bounding_box(d)).size());
}

Int count_dilate(const PartialComplex& pc, const Int& k) {
  if (k < 1) throw DomainError("count_dilate: dilation must be positive");
  PartialComplex d;
  for (const auto& sp : pc) d.push_back({sp.sign, dilate(sp.piece, k)});
  return Int(enumerate_points(d, bounding_box(d)).size());
}

Int count_interior(const Polyhedron& p, const Int& k) {
  if (k < 1) throw DomainError("count_interior: dilation must be positive");
  Polyhedron d = relative_interior(dilate(p, k));
  return Int(enumerate_points(d, bounding_box(d)).size());
}

}  // namespace ehrlat
