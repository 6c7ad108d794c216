#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lhg/bitset.hpp"

namespace lhg {

/// Simple undirected graph, immutable after construction.
///
/// Edges are stored as a sorted list of pairs (u, v) with u < v; every edge
/// index used across the toolkit (line graphs, hypergraph vertices,
/// certificate subsets) refers to a position in this list.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from unordered index pairs. Duplicate pairs collapse
  /// silently; loops and out-of-range indices are rejected.
  static Graph from_edges(int order, std::span<const std::pair<int, int>> pairs);
  static Graph from_edges(int order, std::initializer_list<std::pair<int, int>> pairs);

  int order() const { return int(adj_.size()); }
  int size() const { return int(edges_.size()); }

  int degree(int v) const;
  const Bitset& neighbors(int v) const;
  bool adjacent(int u, int v) const;

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::pair<int, int> edge(int e) const { return edges_[e]; }
  /// Index of edge {u,v} in the sorted list, -1 when absent.
  int edge_index(int u, int v) const;

  int min_degree() const;
  int max_degree() const;
  bool regular(int r) const { return order() > 0 && min_degree() == r && max_degree() == r; }

  VertexSet empty_vertex_set() const { return VertexSet(order()); }
  VertexSet full_vertex_set() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<Bitset> adj_;
  std::vector<std::pair<int, int>> edges_;
};

/// Result of deleting a vertex set: the induced graph on the complement plus
/// the index maps between the two labelings.
struct VertexDeletion {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for deleted vertices
  std::vector<int> new_to_old;
};

VertexDeletion delete_vertices(const Graph& g, const VertexSet& drop);

/// One vertex per edge of g (same indexing as g.edges()); two line-graph
/// vertices are adjacent iff the edges share an endpoint.
Graph line_graph(const Graph& g);

struct GraphMetrics {
  bool connected = false;
  std::optional<int> girth;     // empty for acyclic graphs
  std::optional<int> diameter;  // empty for disconnected graphs
  int degree_min = 0;
  int degree_max = 0;
};

GraphMetrics metrics(const Graph& g);

/// BFS distances from src; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src);

}  // namespace lhg
