#include "ehrlat/formula.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace ehrlat {

namespace {

constexpr size_t kCellCap = 1 << 20;

Rel negate_rel(Rel r) {
  switch (r) {
    case Rel::LT: return Rel::GE;
    case Rel::LE: return Rel::GT;
    case Rel::EQ: return Rel::NE;
    case Rel::NE: return Rel::EQ;
    case Rel::GE: return Rel::LT;
    case Rel::GT: return Rel::LE;
  }
  throw InternalError("negate_rel: bad relation");
}

using Cell = std::vector<Atom>;

// Disjunctive normal form with NE expanded into LT / GT branches.
std::vector<Cell> to_dnf(const Formula& f, bool negated) {
  switch (f.kind) {
    case Formula::Kind::Atom: {
      Atom a = f.atom;
      if (negated) a.rel = negate_rel(a.rel);
      if (a.rel == Rel::NE) {
        Atom lt = a, gt = a;
        lt.rel = Rel::LT;
        gt.rel = Rel::GT;
        return {{lt}, {gt}};
      }
      return {{a}};
    }
    case Formula::Kind::Not:
      if (f.children.size() != 1) throw DomainError("negation must have one child");
      return to_dnf(f.children[0], !negated);
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      bool conjunctive = (f.kind == Formula::Kind::And) != negated;
      if (!conjunctive) {
        std::vector<Cell> cells;
        for (const auto& c : f.children) {
          auto sub = to_dnf(c, negated);
          cells.insert(cells.end(), std::make_move_iterator(sub.begin()),
                       std::make_move_iterator(sub.end()));
          if (cells.size() > kCellCap)
            throw ResourceError("formula expansion exceeds cell limit");
        }
        return cells;
      }
      std::vector<Cell> cells = {{}};
      for (const auto& c : f.children) {
        auto sub = to_dnf(c, negated);
        std::vector<Cell> next;
        for (const auto& left : cells)
          for (const auto& right : sub) {
            Cell merged = left;
            merged.insert(merged.end(), right.begin(), right.end());
            next.push_back(std::move(merged));
            if (next.size() > kCellCap)
              throw ResourceError("formula expansion exceeds cell limit");
          }
        cells = std::move(next);
      }
      return cells;
    }
  }
  throw InternalError("to_dnf: bad node kind");
}

// Rows of the k = 1 polyhedron of one atom; EQ yields an equation.
void append_atom(Polyhedron& p, const Atom& a) {
  LinRow r;
  r.b = a.dilation_coeff;
  r.a = a.coeffs;
  switch (a.rel) {
    case Rel::GE: p.inequalities.push_back(std::move(r)); return;
    case Rel::GT:
      r.strict = true;
      p.inequalities.push_back(std::move(r));
      return;
    case Rel::LE:
    case Rel::LT:
      r.b = -r.b;
      for (auto& q : r.a) q = -q;
      r.strict = (a.rel == Rel::LT);
      p.inequalities.push_back(std::move(r));
      return;
    case Rel::EQ: p.equations.push_back(std::move(r)); return;
    case Rel::NE: break;
  }
  throw InternalError("append_atom: unexpanded relation");
}

Polyhedron cell_polyhedron(const Cell& cell, int dim) {
  Polyhedron p;
  p.dim = dim;
  for (const auto& a : cell) {
    if (int(a.coeffs.size()) != dim)
      throw DimensionError("formula atom dimension mismatch");
    append_atom(p, a);
  }
  return p;
}

LinRow negate_row(const LinRow& r) {
  LinRow n;
  n.b = -r.b;
  n.a.resize(r.a.size());
  for (size_t i = 0; i < r.a.size(); ++i) n.a[i] = -r.a[i];
  n.strict = !r.strict;
  return n;
}

// Inequality-only view of a piece; equations expand into two weak rows.
std::vector<LinRow> flat_rows(const Polyhedron& p) {
  std::vector<LinRow> rows = p.inequalities;
  for (const auto& e : p.equations) {
    LinRow ge = e;
    ge.strict = false;
    rows.push_back(ge);
    LinRow le = negate_row(ge);
    le.strict = false;
    rows.push_back(std::move(le));
  }
  return rows;
}

using RowKey = std::pair<IntVec, bool>;

RowKey row_key(const LinRow& r) {
  RatVec joint;
  joint.reserve(r.a.size() + 1);
  joint.push_back(r.b);
  joint.insert(joint.end(), r.a.begin(), r.a.end());
  return {primitive_vector(joint), r.strict};
}

RowKey negate_key(const RowKey& k) {
  IntVec v(k.first.size());
  for (size_t i = 0; i < k.first.size(); ++i) v[i] = -k.first[i];
  return {std::move(v), !k.second};
}

bool piece_feasible(const Polyhedron& p) {
  return fm_feasible(p.dim, p.inequalities, p.equations);
}

}  // namespace

CompiledFormula compile_formula(const Formula& f, int dim) {
  if (dim < 1) throw DimensionError("compile_formula: dimension must be >= 1");
  auto cells = to_dnf(f, false);

  std::vector<Polyhedron> feasible;
  std::vector<std::vector<LinRow>> feas_rows;
  std::vector<std::set<RowKey>> feas_keys;
  for (const auto& cell : cells) {
    Polyhedron p = cell_polyhedron(cell, dim);
    if (!piece_feasible(p)) continue;
    auto rows = flat_rows(p);
    std::set<RowKey> keys;
    for (const auto& r : rows) keys.insert(row_key(r));
    feasible.push_back(std::move(p));
    feas_rows.push_back(std::move(rows));
    feas_keys.push_back(std::move(keys));
  }

  // First-match disjointification: cell i keeps only the part not covered by
  // any earlier cell.
  std::vector<Polyhedron> pieces;
  for (size_t i = 0; i < feasible.size(); ++i) {
    std::vector<Polyhedron> current = {feasible[i]};
    for (size_t j = 0; j < i && !current.empty(); ++j) {
      // Complementary literal: the cells cannot overlap.
      bool disjoint = false;
      for (const auto& key : feas_keys[j])
        if (feas_keys[i].count(negate_key(key))) {
          disjoint = true;
          break;
        }
      if (disjoint) continue;

      std::vector<Polyhedron> next;
      for (const auto& p : current) {
        Polyhedron overlap = p;
        overlap.inequalities.insert(overlap.inequalities.end(), feas_rows[j].begin(),
                                    feas_rows[j].end());
        if (!piece_feasible(overlap)) {
          next.push_back(p);
          continue;
        }
        // p minus cell j, sliced along the rows of cell j.
        Polyhedron prefix = p;
        for (const auto& row : feas_rows[j]) {
          Polyhedron part = prefix;
          part.inequalities.push_back(negate_row(row));
          if (piece_feasible(part)) next.push_back(std::move(part));
          prefix.inequalities.push_back(row);
        }
        if (next.size() > kCellCap)
          throw ResourceError("disjointification exceeds piece limit");
      }
      current = std::move(next);
    }
    for (auto& p : current) pieces.push_back(std::move(p));
  }

  bool bounded = true;
  for (const auto& p : pieces)
    if (!is_bounded(p)) {
      bounded = false;
      break;
    }
  return CompiledFormula(dim, std::move(pieces), bounded);
}

PartialComplex CompiledFormula::at(const Int& k) const {
  if (k < 1) throw DomainError("formula evaluation: dilation must be >= 1");
  if (!bounded_) throw UnboundedError("formula has an unbounded solution set");
  PartialComplex out;
  for (const auto& p : pieces_) out.push_back({1, dilate(p, k)});
  return out;
}

}  // namespace ehrlat
