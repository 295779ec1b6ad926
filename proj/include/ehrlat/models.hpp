#pragma once

#include <utility>
#include <vector>

#include "ehrlat/formula.hpp"
#include "ehrlat/quasipoly.hpp"

namespace ehrlat {

struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // 0-based; tail -> head when directed
  bool directed = false;
};

struct SchedulingProblem {
  int jobs = 0;
  Formula formula;  // over x_1..x_jobs and the dilation parameter
};

/// Chromatic polynomial via the half-open cube model: proper colorings with
/// colors in (0, k] counted through the lattice-point pipeline.
QuasiPolynomial chromatic_qp(const Graph& g);

/// Same counting function shifted to ehr(k) = chromatic(k - 1), the open-cube
/// variant used by the orientation reciprocity check.
QuasiPolynomial chromatic_shifted_qp(const Graph& g);

/// Deletion-contraction reference value.
QuasiPolynomial chromatic_oracle(const Graph& g);

/// Exhaustive count of acyclic orientations (small graphs only).
Int acyclic_orientation_count(const Graph& g);

/// Ehrhart quasipolynomial of the partition polytope: partitions of k into at
/// most m parts.
QuasiPolynomial restricted_partition_qp(int m);

/// |qp(-k)| against the brute-force count of partitions of k into exactly m
/// distinct parts.
bool partition_reciprocity_check(int m, const Int& k);

/// Nowhere-zero Z_k flow counting function of a directed graph.
QuasiPolynomial modular_flow_qp(const Graph& g);

QuasiPolynomial scheduling_qp(const SchedulingProblem& s);

// Combinatorial reference implementations.
Int partition_count_oracle(const Int& k, int m);
Int distinct_partition_count(const Int& k, int m);
Int flow_count_oracle(const Graph& g, const Int& k);
Int scheduling_oracle(const SchedulingProblem& s, const Int& k);

/// Exact truth value of a formula at an integer assignment and dilation k.
bool eval_formula(const Formula& f, const IntVec& x, const Int& k);

}  // namespace ehrlat
