#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "lhg/graph.hpp"

namespace lhg {

/// Line hypergraph of a graph G: one hypergraph vertex per edge of G (same
/// indexing as G's sorted edge list), one hyperedge per vertex v of G holding
/// the star S(v) of edges incident to v.
class LineHypergraph {
 public:
  explicit LineHypergraph(Graph base);

  const Graph& base() const { return base_; }
  int vertex_count() const { return base_.size(); }
  int hyperedge_count() const { return base_.order(); }
  /// Star S(v) as a bitset over edge indices of the base graph.
  const Bitset& hyperedge(int v) const { return stars_[v]; }
  /// Uniform size when the base is regular.
  std::optional<int> uniformity() const;

 private:
  Graph base_;
  std::vector<Bitset> stars_;
};

inline LineHypergraph line_hypergraph(const Graph& g) { return LineHypergraph(g); }

/// Hyperedges as vertices, adjacent when the hyperedges intersect. For a
/// line hypergraph this is isomorphic (index-identical) to the base graph.
Graph conflict_graph(const LineHypergraph& h);

/// Exact matching number: maximum independent set of the conflict graph.
int matching_number(const LineHypergraph& h);

enum class CoverMode {
  automatic,   // Gallai fast path; generic cross-check when the base is small
  fast_only,   // Gallai fast path only
  cross_check  // always run both and require agreement
};

/// Exact vertex cover number of the line hypergraph. Fast path: a cover of
/// L(G) is an edge cover of G, so tau = |V_G| - matching(G) (Gallai). The
/// generic hitting-set branch and bound exists to validate the fast path and
/// runs automatically for bases with at most 14 vertices.
int cover_number(const LineHypergraph& h, CoverMode mode = CoverMode::automatic);

/// Generic minimum hitting set over arbitrary hyperedge lists (exposed for
/// tests and cross-validation).
int minimum_hitting_set(int universe, const std::vector<Bitset>& sets);

/// Color classes of a proper r-edge-coloring of the base, as a partition of
/// the hypergraph vertices; nullopt when the base is not r-regular or not
/// r-edge-colorable.
std::optional<std::vector<Bitset>> r_partition(const LineHypergraph& h, int r);

/// Bijection between independent sets of the base and matchings of h:
/// the matching {S(v) | v in I}, as hyperedge indices.
std::vector<int> matching_from_independent_set(const LineHypergraph& h, const VertexSet& I);
VertexSet independent_set_from_matching(const LineHypergraph& h, const std::vector<int>& M);

struct RyserReport {
  int nu = 0;
  int tau = 0;
  int bound = 0;  // (r-1) * nu
  bool satisfied = false;
  bool extremal = false;
};

RyserReport ryser_report(const LineHypergraph& h, int r);

/// Text export: "v <vertex count>" then one line per hyperedge.
void write_hypergraph(const LineHypergraph& h, std::ostream& os);

}  // namespace lhg
