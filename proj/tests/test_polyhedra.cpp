#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "ehrlat/formula.hpp"
#include "ehrlat/polyhedron.hpp"

using namespace ehrlat;

namespace {

LinRow row(std::initializer_list<long> a, long b, bool strict = false) {
  LinRow r;
  r.b = b;
  for (long c : a) r.a.push_back(Rat(c));
  r.strict = strict;
  return r;
}

Polyhedron box01(int d) {
  Polyhedron p;
  p.dim = d;
  for (int i = 0; i < d; ++i) {
    LinRow lo, hi;
    lo.b = 0;
    hi.b = 1;
    lo.a.assign(d, Rat(0));
    hi.a.assign(d, Rat(0));
    lo.a[i] = 1;
    hi.a[i] = -1;
    p.inequalities.push_back(lo);
    p.inequalities.push_back(hi);
  }
  return p;
}

Polyhedron partition2() {
  Polyhedron p;
  p.dim = 2;
  p.inequalities.push_back(row({1, -1}, 0));
  p.inequalities.push_back(row({0, 1}, 0));
  p.equations.push_back(row({1, 1}, -1));
  return p;
}

RatVec pt(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.push_back(Rat(x));
  return v;
}

Atom atom(std::initializer_list<long> c, long ck, Rel rel) {
  Atom a;
  for (long q : c) a.coeffs.push_back(Rat(q));
  a.dilation_coeff = ck;
  a.rel = rel;
  return a;
}

bool eval_formula(const Formula& f, const IntVec& x, const Int& k) {
  switch (f.kind) {
    case Formula::Kind::Atom: {
      Rat v = f.atom.dilation_coeff * k;
      for (size_t i = 0; i < x.size(); ++i) v += f.atom.coeffs[i] * x[i];
      switch (f.atom.rel) {
        case Rel::LT: return v < 0;
        case Rel::LE: return v <= 0;
        case Rel::EQ: return v == 0;
        case Rel::NE: return v != 0;
        case Rel::GE: return v >= 0;
        case Rel::GT: return v > 0;
      }
      return false;
    }
    case Formula::Kind::Not: return !eval_formula(f.children[0], x, k);
    case Formula::Kind::And:
      for (const auto& c : f.children)
        if (!eval_formula(c, x, k)) return false;
      return true;
    case Formula::Kind::Or:
      for (const auto& c : f.children)
        if (eval_formula(c, x, k)) return true;
      return false;
  }
  return false;
}

// Checks union membership and pairwise disjointness against direct formula
// evaluation on a grid, returning the number of covered points.
Int grid_check(const Formula& f, const CompiledFormula& cf, int d, const Int& k,
               long lo, long hi) {
  PartialComplex pieces = cf.at(k);
  Int covered = 0;
  IntVec x(d);
  std::function<void(int)> scan = [&](int pos) {
    if (pos == d) {
      int hits = 0;
      RatVec xr = to_rat_vec(x);
      for (const auto& sp : pieces)
        if (contains(sp.piece, xr)) ++hits;
      CHECK(hits <= 1);
      CHECK((hits == 1) == eval_formula(f, x, k));
      if (hits == 1) covered += 1;
      return;
    }
    for (long v = lo; v <= hi; ++v) {
      x[pos] = v;
      scan(pos + 1);
    }
  };
  scan(0);
  return covered;
}

}  // namespace

TEST_CASE("unit square vertices") {
  auto vs = vertices(box01(2));
  REQUIRE(vs.vertices.size() == 4);
  CHECK(vs.vertices[0].point == pt({0, 0}));
  CHECK(vs.vertices[1].point == pt({0, 1}));
  CHECK(vs.vertices[2].point == pt({1, 0}));
  CHECK(vs.vertices[3].point == pt({1, 1}));
  for (const auto& v : vs.vertices) CHECK(v.edge_dirs.size() == 2);
  CHECK(vs.vertices[0].edge_dirs[0] == IntVec{0, 1});
  CHECK(vs.vertices[0].edge_dirs[1] == IntVec{1, 0});
  CHECK(vs.vertices[3].edge_dirs[0] == IntVec{-1, 0});
  CHECK(vs.vertices[3].edge_dirs[1] == IntVec{0, -1});
}

TEST_CASE("partition polytope m=2 vertices") {
  auto vs = vertices(partition2());
  REQUIRE(vs.vertices.size() == 2);
  CHECK(vs.vertices[0].point == RatVec{Rat(1, 2), Rat(1, 2)});
  CHECK(vs.vertices[1].point == pt({1, 0}));
  CHECK(vs.vertices[0].edge_dirs == std::vector<IntVec>{{1, -1}});
  CHECK(vs.vertices[1].edge_dirs == std::vector<IntVec>{{-1, 1}});
}

TEST_CASE("standard simplex vertices") {
  for (int d = 1; d <= 4; ++d) {
    Polyhedron p;
    p.dim = d;
    for (int i = 0; i < d; ++i) {
      LinRow lo;
      lo.b = 0;
      lo.a.assign(d, Rat(0));
      lo.a[i] = 1;
      p.inequalities.push_back(lo);
    }
    LinRow cap;
    cap.b = 1;
    cap.a.assign(d, Rat(-1));
    p.inequalities.push_back(cap);
    auto vs = vertices(p);
    CHECK(vs.vertices.size() == size_t(d) + 1);
    for (const auto& v : vs.vertices) CHECK(v.edge_dirs.size() == size_t(d));
  }
}

TEST_CASE("vertex errors") {
  Polyhedron empty;
  empty.dim = 1;
  empty.inequalities.push_back(row({1}, -2));   // x >= 2
  empty.inequalities.push_back(row({-1}, 1));   // x <= 1
  CHECK(is_empty(empty));
  CHECK_THROWS_AS(vertices(empty), EmptyError);

  Polyhedron ray;
  ray.dim = 1;
  ray.inequalities.push_back(row({1}, 0));
  CHECK(!is_bounded(ray));
  CHECK_THROWS_AS(vertices(ray), UnboundedError);
}

TEST_CASE("dilate scales vertices") {
  Polyhedron p = partition2();
  auto base = vertices(p);
  auto scaled = vertices(dilate(p, 3));
  REQUIRE(base.vertices.size() == scaled.vertices.size());
  for (size_t i = 0; i < base.vertices.size(); ++i)
    for (int t = 0; t < p.dim; ++t)
      CHECK(scaled.vertices[i].point[t] == 3 * base.vertices[i].point[t]);
  CHECK_THROWS_AS(dilate(p, 0), DomainError);
}

TEST_CASE("cone_over data") {
  Polyhedron seg;
  seg.dim = 1;
  seg.inequalities.push_back(row({1}, 0));
  seg.inequalities.push_back(row({-1}, 1));
  auto c = cone_over(seg);
  CHECK(c.ell == 1);
  REQUIRE(c.generators.size() == 2);
  CHECK(c.generators[0] == IntVec{0, 1});
  CHECK(c.generators[1] == IntVec{1, 1});

  Polyhedron half;
  half.dim = 1;
  half.inequalities.push_back(row({1}, 0));
  half.inequalities.push_back(row({-2}, 1));  // x <= 1/2
  auto ch = cone_over(half);
  CHECK(ch.ell == 2);
  REQUIRE(ch.generators.size() == 2);
  CHECK(ch.generators[0] == IntVec{0, 2});
  CHECK(ch.generators[1] == IntVec{1, 2});

  CHECK(cone_over(partition2()).ell == 2);
}

TEST_CASE("relative interior") {
  Polyhedron seg;
  seg.dim = 1;
  seg.inequalities.push_back(row({1}, 0));
  seg.inequalities.push_back(row({-1}, 1));
  auto ri = relative_interior(seg);
  CHECK(ri.equations.empty());
  REQUIRE(ri.inequalities.size() == 2);
  CHECK(ri.inequalities[0].strict);
  CHECK(ri.inequalities[1].strict);
  CHECK(contains(ri, RatVec{Rat(1, 2)}));
  CHECK(!contains(ri, pt({0})));

  // Implied equality moves to the equation set.
  Polyhedron thin;
  thin.dim = 2;
  thin.inequalities.push_back(row({0, 1}, 0));
  thin.inequalities.push_back(row({0, -1}, 0));
  thin.inequalities.push_back(row({1, 0}, 0));
  auto rt = relative_interior(thin);
  CHECK(rt.equations.size() == 2);
  REQUIRE(rt.inequalities.size() == 1);
  CHECK(rt.inequalities[0].strict);

  Polyhedron point;
  point.dim = 1;
  point.equations.push_back(row({1}, 0));
  auto rp = relative_interior(point);
  CHECK(rp.inequalities.empty());
  CHECK(rp.equations.size() == 1);
}

TEST_CASE("affine dimension") {
  CHECK(affine_dimension(box01(2)) == 2);
  CHECK(affine_dimension(partition2()) == 1);
  Polyhedron point;
  point.dim = 2;
  point.equations.push_back(row({1, 0}, -1));
  point.equations.push_back(row({0, 1}, -1));
  CHECK(affine_dimension(point) == 0);
}

TEST_CASE("fourier-motzkin feasibility") {
  CHECK(fm_feasible(2, {row({1, 0}, 0), row({0, 1}, 0), row({-1, -1}, 1)}, {}));
  CHECK(!fm_feasible(1, {row({1}, 0, true), row({-1}, 0, true)}, {}));
  CHECK(fm_feasible(1, {row({1}, 0), row({-1}, 0)}, {}));
  CHECK(!fm_feasible(2, {row({1, 1}, -3)}, {row({1, 0}, -1), row({0, 1}, -1)}));
  CHECK(fm_feasible(2, {row({1, 1}, -2)}, {row({1, 0}, -1), row({0, 1}, -1)}));
}

TEST_CASE("half-open square perturbed vertices") {
  Polyhedron p = box01(2);
  p.inequalities[1].strict = true;  // x < 1
  p.inequalities[3].strict = true;  // y < 1
  auto pv = perturbed_vertices(p);
  REQUIRE(pv.size() == 4);
  int moved = 0;
  for (const auto& v : pv) {
    bool zero = true;
    for (const Rat& q : v.point1)
      if (q != 0) zero = false;
    if (!zero) ++moved;
    CHECK(v.edge_dirs.size() == 2);
  }
  CHECK(moved == 3);
}

TEST_CASE("compile single-variable interval") {
  Formula f = Formula::make_and({Formula::make_atom(atom({1}, 0, Rel::GT)),
                                 Formula::make_atom(atom({1}, -1, Rel::LE))});
  auto cf = compile_formula(f, 1);
  CHECK(cf.pieces().size() == 1);
  for (long k = 1; k <= 5; ++k)
    CHECK(grid_check(f, cf, 1, k, -2, k + 2) == k);
}

TEST_CASE("compile single-edge coloring constraint") {
  std::vector<Formula> parts;
  for (int i = 0; i < 2; ++i) {
    RatVec c(2, Rat(0));
    c[i] = 1;
    parts.push_back(Formula::make_atom({c, Rat(0), Rel::GT}));
    parts.push_back(Formula::make_atom({c, Rat(-1), Rel::LE}));
  }
  parts.push_back(Formula::make_atom(atom({1, -1}, 0, Rel::NE)));
  Formula f = Formula::make_and(parts);
  auto cf = compile_formula(f, 2);
  CHECK(cf.pieces().size() == 2);
  for (long k = 1; k <= 4; ++k)
    CHECK(grid_check(f, cf, 2, k, -1, k + 1) == Int(k) * k - k);
}

TEST_CASE("compile implication over the 2-box") {
  std::vector<Formula> parts;
  for (int i = 0; i < 3; ++i) {
    RatVec c(3, Rat(0));
    c[i] = 1;
    parts.push_back(Formula::make_atom({c, Rat(0), Rel::GT}));
    parts.push_back(Formula::make_atom({c, Rat(-1), Rel::LE}));
  }
  parts.push_back(Formula::make_or(
      {Formula::make_not(Formula::make_atom(atom({1, -1, 0}, 0, Rel::LT))),
       Formula::make_atom(atom({0, -1, 1}, 0, Rel::LT))}));
  Formula f = Formula::make_and(parts);
  auto cf = compile_formula(f, 3);
  CHECK(grid_check(f, cf, 3, 2, 0, 3) == 7);
  for (long k = 1; k <= 3; ++k) grid_check(f, cf, 3, k, 0, k + 1);
}

TEST_CASE("compile overlapping disjunction stays disjoint") {
  Formula branch = Formula::make_and({Formula::make_atom(atom({1}, 0, Rel::GE)),
                                      Formula::make_atom(atom({1}, -1, Rel::LE))});
  Formula f = Formula::make_or({branch, branch});
  auto cf = compile_formula(f, 1);
  for (long k = 1; k <= 4; ++k)
    CHECK(grid_check(f, cf, 1, k, -2, k + 2) == k + 1);
}

TEST_CASE("compile unbounded set errors at evaluation") {
  Formula f = Formula::make_atom(atom({1}, 0, Rel::GE));
  auto cf = compile_formula(f, 1);
  CHECK_THROWS_AS(cf.at(1), UnboundedError);
  Formula g = Formula::make_and({Formula::make_atom(atom({1}, 0, Rel::GE)),
                                 Formula::make_atom(atom({1}, -1, Rel::LE))});
  CHECK_THROWS_AS(compile_formula(g, 1).at(0), DomainError);
}
