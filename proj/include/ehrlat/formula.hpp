#pragma once

#include <vector>

#include "ehrlat/polyhedron.hpp"

namespace ehrlat {

enum class Rel { LT, LE, EQ, NE, GE, GT };

/// Linear atom coeffs.x + dilation_coeff * k REL 0, where k is the dilation
/// parameter.
struct Atom {
  RatVec coeffs;
  Rat dilation_coeff;
  Rel rel = Rel::LE;
};

/// Boolean combination of linear atoms.
struct Formula {
  enum class Kind { Atom, And, Or, Not };

  Kind kind = Kind::Atom;
  Atom atom;                       // when kind == Atom
  std::vector<Formula> children;   // And / Or: any arity; Not: exactly one

  static Formula make_atom(Atom a) {
    Formula f;
    f.kind = Kind::Atom;
    f.atom = std::move(a);
    return f;
  }
  static Formula make_and(std::vector<Formula> cs) {
    Formula f;
    f.kind = Kind::And;
    f.children = std::move(cs);
    return f;
  }
  static Formula make_or(std::vector<Formula> cs) {
    Formula f;
    f.kind = Kind::Or;
    f.children = std::move(cs);
    return f;
  }
  static Formula make_not(Formula c) {
    Formula f;
    f.kind = Kind::Not;
    f.children.push_back(std::move(c));
    return f;
  }
};

/// Result of compiling a formula: disjoint half-open pieces whose union is the
/// solution set, homogeneous in the dilation parameter. The structural work
/// happens once; at(k) only rescales.
class CompiledFormula {
public:
  CompiledFormula(int dim, std::vector<Polyhedron> pieces, bool bounded)
      : dim_(dim), pieces_(std::move(pieces)), bounded_(bounded) {}

  /// Pairwise disjoint pieces at dilation k >= 1 (all signs +1).
  PartialComplex at(const Int& k) const;

  /// The pieces at k = 1.
  const std::vector<Polyhedron>& pieces() const { return pieces_; }
  int dim() const { return dim_; }
  bool bounded() const { return bounded_; }

private:
  int dim_;
  std::vector<Polyhedron> pieces_;
  bool bounded_;
};

/// Compiles a formula over x in Z^dim into disjoint half-open pieces.
/// Feasible but unbounded solution sets are reported when evaluating at(k).
CompiledFormula compile_formula(const Formula& f, int dim);

}  // namespace ehrlat
