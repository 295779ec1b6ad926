#include "ehrlat/genfunc.hpp"

#include <algorithm>
#include <functional>

namespace ehrlat {

namespace {

RatVec delta_shift(const std::vector<IntVec>& gens, const std::vector<bool>& flags,
                   size_t n) {
  RatVec d(n, Rat(0));
  for (size_t j = 0; j < gens.size(); ++j)
    if (!flags.empty() && flags[j])
      for (size_t i = 0; i < n; ++i) d[i] += Rat(gens[j][i]);
  return d;
}

struct PreparedTerm {
  int sign;
  std::vector<IntVec> generators;
  RatVec apex0, apex1, apex_delta;
};

// Vertex cones of one signed piece, triangulated and (optionally) decomposed
// to unimodular cones. Facet flags are folded into the delta apex shift.
void prepare_piece(const PerturbedVertex& v, int sign, GfMethod method,
                   std::vector<PreparedTerm>& out) {
  const size_t n = v.point0.size();
  auto cells = v.edge_dirs.empty()
                   ? SignedConeList{{1, HalfOpenCone{RatVec(n, Rat(0)), {}, {}}}}
                   : triangulate_cone(v.edge_dirs);
  for (const auto& cell : cells) {
    if (method == GfMethod::Fpp || cell.cone.generators.empty()) {
      out.push_back({sign, cell.cone.generators, v.point0, v.point1,
                     delta_shift(cell.cone.generators, cell.cone.open_flags, n)});
      continue;
    }
    HalfOpenCone c;
    c.apex.assign(n, Rat(0));
    c.generators = cell.cone.generators;
    c.open_flags = cell.cone.open_flags;
    for (const auto& leaf : barvinok_decompose(c))
      out.push_back({sign * leaf.sign, leaf.cone.generators, v.point0, v.point1,
                     delta_shift(leaf.cone.generators, leaf.cone.open_flags, n)});
  }
}

GenFunc assemble(const std::vector<PreparedTerm>& terms, const Int& k) {
  GenFunc g;
  for (const auto& t : terms) {
    PertVec apex(t.apex0.size());
    for (size_t i = 0; i < apex.size(); ++i)
      apex[i] = Pert(Rat(k) * t.apex0[i], t.apex1[i], t.apex_delta[i]);
    auto pts = parallelepiped_points_at(t.generators, apex);
    if (pts.empty()) continue;
    g.terms.push_back({t.sign, std::move(pts), t.generators});
  }
  return g;
}

// Truncated product of exact power series.
RatVec series_mul(const RatVec& a, const RatVec& b, int order) {
  RatVec r(order + 1, Rat(0));
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j) r[i + j] += a[i] * b[j];
  return r;
}

// x/(e^x - 1) at x = c*t, coefficients of t^0..t^order.
RatVec euler_series(const Int& c, int order) {
  RatVec s(order + 1);  // (e^x - 1)/x
  Int fact = 1;
  Rat cp = 1;
  for (int m = 0; m <= order; ++m) {
    fact *= m + 1;
    s[m] = cp / Rat(fact);
    cp *= Rat(c);
  }
  RatVec e(order + 1, Rat(0));
  e[0] = 1;
  for (int m = 1; m <= order; ++m) {
    Rat acc = 0;
    for (int i = 1; i <= m; ++i) acc += s[i] * e[m - i];
    e[m] = -acc;
  }
  return e;
}

}  // namespace

Int specialize_count(const GenFunc& g) {
  if (g.terms.empty()) return 0;
  size_t n = 0;
  for (const auto& t : g.terms) {
    if (!t.num.empty()) n = t.num[0].size();
    else if (!t.den.empty()) n = t.den[0].size();
  }

  Int maxabs = 1;
  for (const auto& t : g.terms)
    for (const auto& b : t.den)
      for (const Int& x : b) maxabs = std::max(maxabs, Int(abs(x)));
  Int m = maxabs + 1;

  for (;; m += 1) {
    // lambda = (1, M, M^2, ...); base-M digits below M make every inner
    // product with a nonzero denominator exponent nonzero, checked anyway.
    IntVec lam(n);
    Int p = 1;
    for (size_t i = 0; i < n; ++i) {
      lam[i] = p;
      p *= m;
    }
    bool ok = true;
    for (const auto& t : g.terms)
      for (const auto& b : t.den)
        if (dot(lam, b) == 0) ok = false;
    if (!ok) continue;

    Rat total = 0;
    for (const auto& t : g.terms) {
      const int r = int(t.den.size());
      RatVec num(r + 1, Rat(0));
      for (const auto& pt : t.num) {
        Int a = dot(lam, pt);
        Rat ap = 1;
        Int fact = 1;
        for (int i = 0; i <= r; ++i) {
          num[i] += ap / Rat(fact);
          ap *= Rat(a);
          fact *= i + 1;
        }
      }
      RatVec prod = std::move(num);
      Rat cden = 1;
      for (const auto& b : t.den) {
        Int c = dot(lam, b);
        cden *= Rat(c);
        prod = series_mul(prod, euler_series(c, r), r);
      }
      Rat val = prod[r] / cden;
      if (r % 2) val = -val;
      total += Rat(t.sign) * val;
    }
    if (!is_integer(total)) throw InternalError("specialize_count: non-integer total");
    return total.get_num();
  }
}

GenFunc gen_func(const Polyhedron& p, GfMethod method) {
  std::vector<PreparedTerm> terms;
  for (const auto& v : tangent_cones(p)) prepare_piece(v, 1, method, terms);
  return assemble(terms, 1);
}

GenFunc gen_func(const PartialComplex& pc, GfMethod method) {
  std::vector<PreparedTerm> terms;
  for (const auto& sp : pc) {
    if (is_empty(sp.piece)) continue;
    for (const auto& v : perturbed_vertices(sp.piece))
      prepare_piece(v, sp.sign, method, terms);
  }
  return assemble(terms, 1);
}

DilationCounter::DilationCounter(const PartialComplex& pc, GfMethod method) {
  std::vector<PreparedTerm> prepared;
  for (const auto& sp : pc) {
    if (is_empty(sp.piece)) continue;
    Polyhedron cl = closure(sp.piece);
    ell_ = lcm(ell_, vertex_denominator_lcm(cl));
    dim_ = std::max(dim_, affine_dimension(cl));
    for (const auto& v : perturbed_vertices(sp.piece))
      prepare_piece(v, sp.sign, method, prepared);
  }
  for (auto& t : prepared)
    terms_.push_back({t.sign, std::move(t.generators), std::move(t.apex0),
                      std::move(t.apex1), std::move(t.apex_delta)});
}

GenFunc DilationCounter::at(const Int& k) const {
  if (k < 1) throw DomainError("dilation must be >= 1");
  std::vector<PreparedTerm> view;
  view.reserve(terms_.size());
  for (const auto& t : terms_)
    view.push_back({t.sign, t.generators, t.apex0, t.apex1, t.apex_delta});
  return assemble(view, k);
}

Int DilationCounter::count(const Int& k) const { return specialize_count(at(k)); }

EhrhartSeries ehrhart_series(const Polyhedron& p) {
  auto c = cone_over(p);
  auto cells = triangulate_cone(c.generators);
  const int d = int(cells[0].cone.generators.size());
  const Int len = Int(d) * c.ell;
  if (len > 1000000) throw ResourceError("ehrhart_series: numerator too long");
  std::vector<Int> h(len.get_ui(), 0);
  for (const auto& cell : cells) {
    HalfOpenCone hc;
    hc.apex.assign(p.dim + 1, Rat(0));
    hc.generators = cell.cone.generators;
    hc.open_flags = cell.cone.open_flags;
    for (const auto& [ht, cnt] : heights(parallelepiped_points(hc))) {
      if (ht < 0 || ht >= len) throw InternalError("ehrhart_series: height out of range");
      h[ht.get_ui()] += cnt;
    }
  }
  return {std::move(h), c.ell, d};
}

namespace {

QuasiPolynomial qp_from_series(const EhrhartSeries& es) {
  QuasiPolynomial qp;
  qp.period = es.ell;
  qp.degree = es.d - 1;
  for (Int r = 0; r < es.ell; r += 1) {
    Poly c;
    for (int i = 0; i < es.d; ++i) {
      const Int& h = es.hstar[Int(Int(i) * es.ell + r).get_ui()];
      if (h == 0) continue;
      Poly b = binomial_poly(Rat(es.d - 1 - i), es.d - 1);
      b = poly_compose_affine(b, make_rat(1, es.ell), make_rat(-r, es.ell));
      c = poly_add(c, poly_scale(b, Rat(h)));
    }
    c.resize(es.d, Rat(0));
    qp.constituents.push_back(std::move(c));
  }
  return qp;
}

QuasiPolynomial zero_qp() { return {1, 0, {{Rat(0)}}}; }

// Half-open pieces expand into signed closed pieces: a strict row is the weak
// row minus the corresponding equality slice.
void expand_strict(const Polyhedron& piece, int sign,
                   std::vector<std::pair<int, Polyhedron>>& out) {
  Polyhedron base = piece;
  std::vector<size_t> strict_rows;
  for (size_t i = 0; i < base.inequalities.size(); ++i)
    if (base.inequalities[i].strict) {
      base.inequalities[i].strict = false;
      strict_rows.push_back(i);
    }
  std::function<void(size_t, Polyhedron, int)> rec = [&](size_t i, Polyhedron q, int s) {
    if (is_empty(q)) return;
    if (i == strict_rows.size()) {
      out.emplace_back(s, std::move(q));
      return;
    }
    rec(i + 1, q, s);
    Polyhedron cut = std::move(q);
    cut.equations.push_back(cut.inequalities[strict_rows[i]]);
    rec(i + 1, std::move(cut), -s);
  };
  rec(0, std::move(base), sign);
}

QuasiPolynomial hstar_qp(const PartialComplex& pc) {
  std::vector<std::pair<int, Polyhedron>> closed;
  for (const auto& sp : pc) expand_strict(sp.piece, sp.sign, closed);
  QuasiPolynomial total = zero_qp();
  for (const auto& [sign, q] : closed)
    total = qp_add(total, qp_scale(qp_from_series(ehrhart_series(q)), Rat(sign)));
  return total;
}

QuasiPolynomial interpolate_qp(const PartialComplex& pc, GfMethod gf) {
  PartialComplex live;
  for (const auto& sp : pc)
    if (!is_empty(sp.piece)) live.push_back(sp);
  if (live.empty()) return zero_qp();

  DilationCounter counter(live, gf);
  const Int& ell = counter.period_multiple();
  const int d = counter.dimension();

  QuasiPolynomial qp;
  qp.period = ell;
  qp.degree = d;
  for (Int r = 0; r < ell; r += 1) {
    // d+1 nodes in the residue class, starting at r (at ell when r = 0).
    RatMatrix m(d + 1, d + 1);
    RatVec rhs(d + 1);
    for (int t = 0; t <= d; ++t) {
      Int k = (r == 0 ? ell : r) + Int(t) * ell;
      Rat kp = 1;
      for (int j = 0; j <= d; ++j) {
        m.at(t, j) = kp;
        kp *= Rat(k);
      }
      rhs[t] = Rat(counter.count(k));
    }
    auto sol = solve_square(m, rhs);
    if (!sol) throw InternalError("ehrhart_qp: singular interpolation system");
    qp.constituents.push_back(std::move(*sol));
  }
  return qp;
}

}  // namespace

QuasiPolynomial ehrhart_qp(const PartialComplex& pc, QpMethod method, GfMethod gf) {
  return method == QpMethod::Interpolation ? interpolate_qp(pc, gf) : hstar_qp(pc);
}

QuasiPolynomial ehrhart_qp(const Polyhedron& p, QpMethod method, GfMethod gf) {
  return ehrhart_qp(PartialComplex{{1, p}}, method, gf);
}

}  // namespace ehrlat
