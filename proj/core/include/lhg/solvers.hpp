#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lhg/graph.hpp"

namespace lhg {

struct IndependenceResult {
  int alpha = 0;
  VertexSet witness;
  uint64_t nodes_explored = 0;
};

/// Exact maximum independent set.
///
/// Branch and bound over candidate bitsets: greedy seed, isolated/pendant
/// reductions, a clique-cover upper bound, and a closed form once every
/// candidate has degree <= 2. Branching always picks the maximum-degree
/// candidate, lowest index on ties, include branch first; everything here is
/// deterministic so witnesses and node counts are reproducible.
IndependenceResult max_independent_set(const Graph& g);

/// Decision form with early exit: a witness independent set of size >= target
/// avoiding `excluded`, or nullopt if none exists. Equivalent to
/// max_independent_set(delete_vertices(g, excluded)).alpha >= target.
std::optional<VertexSet> has_independent_set(const Graph& g, int target,
                                             const VertexSet& excluded);

struct EdgeColoring {
  std::vector<int> colors;  // per edge index of the input graph
};

/// Exact r-edge-colorability by backtracking over edges in DFS order; the
/// colors of the first vertex's incident edges are pinned to 0..deg-1.
std::optional<EdgeColoring> edge_colorable(const Graph& g, int r);

/// Matching number, computed as the independence number of the line graph.
int max_matching(const Graph& g);

struct HamiltonianResult {
  enum class Status { cycle, none, unknown };
  Status status = Status::none;
  std::vector<int> cycle;       // vertex sequence when status == cycle
  uint64_t nodes_explored = 0;
};

/// Exact Hamiltonian cycle search over edge states with forced-edge
/// propagation (every vertex needs exactly two cycle edges), premature-cycle
/// detection, and a connectivity cut check. Budget exhaustion reports
/// `unknown`, never a wrong `none`.
HamiltonianResult hamiltonian(const Graph& g, uint64_t node_budget = 50'000'000);

}  // namespace lhg
