#include "lhg/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "lhg/errors.hpp"

namespace lhg {

Graph Graph::from_edges(int order, std::span<const std::pair<int, int>> pairs) {
  if (order < 0) raise(Err::IndexOutOfRange, "negative order");
  Graph g;
  g.adj_.assign(order, Bitset(order));
  std::vector<std::pair<int, int>> es;
  es.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    if (u < 0 || v < 0 || u >= order || v >= order)
      raise(Err::IndexOutOfRange,
            "edge (" + std::to_string(u) + "," + std::to_string(v) + ") vs order " +
                std::to_string(order));
    if (u == v) raise(Err::LoopRejected, "loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    es.emplace_back(u, v);
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  for (auto [u, v] : es) {
    g.adj_[u].set(v);
    g.adj_[v].set(u);
  }
  g.edges_ = std::move(es);
  return g;
}

Graph Graph::from_edges(int order, std::initializer_list<std::pair<int, int>> pairs) {
  return from_edges(order, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
}

int Graph::degree(int v) const {
  if (v < 0 || v >= order()) raise(Err::IndexOutOfRange, "vertex " + std::to_string(v));
  return adj_[v].count();
}

const Bitset& Graph::neighbors(int v) const {
  if (v < 0 || v >= order()) raise(Err::IndexOutOfRange, "vertex " + std::to_string(v));
  return adj_[v];
}

bool Graph::adjacent(int u, int v) const {
  if (u < 0 || u >= order() || v < 0 || v >= order())
    raise(Err::IndexOutOfRange, "vertex pair");
  return adj_[u].test(v);
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
  if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
  return int(it - edges_.begin());
}

int Graph::min_degree() const {
  int m = order() == 0 ? 0 : adj_[0].count();
  for (const auto& a : adj_) m = std::min(m, a.count());
  return m;
}

int Graph::max_degree() const {
  int m = 0;
  for (const auto& a : adj_) m = std::max(m, a.count());
  return m;
}

VertexSet Graph::full_vertex_set() const {
  VertexSet s(order());
  for (int v = 0; v < order(); ++v) s.set(v);
  return s;
}

VertexDeletion delete_vertices(const Graph& g, const VertexSet& drop) {
  const int n = g.order();
  if (drop.capacity() != n) raise(Err::IndexOutOfRange, "vertex set capacity mismatch");
  VertexDeletion out;
  out.old_to_new.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    if (!drop.test(v)) {
      out.old_to_new[v] = int(out.new_to_old.size());
      out.new_to_old.push_back(v);
    }
  }
  std::vector<std::pair<int, int>> es;
  for (auto [u, v] : g.edges())
    if (out.old_to_new[u] >= 0 && out.old_to_new[v] >= 0)
      es.emplace_back(out.old_to_new[u], out.old_to_new[v]);
  out.graph = Graph::from_edges(int(out.new_to_old.size()), es);
  return out;
}

Graph line_graph(const Graph& g) {
  const int m = g.size();
  std::vector<std::pair<int, int>> es;
  // edges at each vertex form a clique
  std::vector<std::vector<int>> incident(g.order());
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edge(e);
    incident[u].push_back(e);
    incident[v].push_back(e);
  }
  for (const auto& star : incident)
    for (size_t i = 0; i < star.size(); ++i)
      for (size_t j = i + 1; j < star.size(); ++j) es.emplace_back(star[i], star[j]);
  return Graph::from_edges(m, es);
}

std::vector<int> bfs_distances(const Graph& g, int src) {
  std::vector<int> dist(g.order(), -1);
  std::deque<int> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    g.neighbors(u).for_each([&](int v) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
    });
  }
  return dist;
}

GraphMetrics metrics(const Graph& g) {
  GraphMetrics m;
  const int n = g.order();
  m.degree_min = g.min_degree();
  m.degree_max = g.max_degree();
  if (n == 0) {
    m.connected = true;
    return m;
  }
  m.connected = true;
  int ecc_max = 0;
  for (int s = 0; s < n && m.connected; ++s) {
    auto d = bfs_distances(g, s);
    for (int v = 0; v < n; ++v) {
      if (d[v] < 0) {
        m.connected = false;
        break;
      }
      ecc_max = std::max(ecc_max, d[v]);
    }
  }
  if (m.connected) m.diameter = ecc_max;

  // girth: BFS from every root; a non-tree edge (u,v) seen from root s closes
  // a cycle of length dist[u]+dist[v]+1 through s, and the minimum over all
  // roots is exact for unweighted graphs
  int best = -1;
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      bool stop = false;
      g.neighbors(u).for_each([&](int v) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push_back(v);
        } else if (v != parent[u]) {
          int c = dist[u] + dist[v] + 1;
          if (best < 0 || c < best) best = c;
          if (c <= 3) stop = true;
        }
      });
      if (stop) break;
    }
    if (best == 3) break;
  }
  if (best >= 0) m.girth = best;
  return m;
}

}  // namespace lhg
