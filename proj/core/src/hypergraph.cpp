#include "lhg/hypergraph.hpp"

#include <algorithm>

#include "lhg/errors.hpp"
#include "lhg/solvers.hpp"

namespace lhg {

LineHypergraph::LineHypergraph(Graph base) : base_(std::move(base)) {
  const int n = base_.order();
  const int m = base_.size();
  for (int v = 0; v < n; ++v)
    if (base_.degree(v) == 0)
      raise(Err::IsolatedVertex, "vertex " + std::to_string(v) + " has no incident edge");
  stars_.assign(n, Bitset(m));
  for (int e = 0; e < m; ++e) {
    auto [u, v] = base_.edge(e);
    stars_[u].set(e);
    stars_[v].set(e);
  }
}

std::optional<int> LineHypergraph::uniformity() const {
  int mn = base_.min_degree(), mx = base_.max_degree();
  if (mn != mx) return std::nullopt;
  return mn;
}

Graph conflict_graph(const LineHypergraph& h) {
  const int n = h.hyperedge_count();
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (h.hyperedge(u).intersects(h.hyperedge(v))) es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

int matching_number(const LineHypergraph& h) {
  return max_independent_set(conflict_graph(h)).alpha;
}

int minimum_hitting_set(int universe, const std::vector<Bitset>& sets) {
  for (const auto& s : sets)
    if (s.none()) raise(Err::PreconditionViolated, "empty hyperedge cannot be hit");
  int best = universe;

  // lower bound: greedy packing of pairwise disjoint uncovered sets
  auto pack_bound = [&](const Bitset& hit) {
    Bitset blocked(universe);
    int cnt = 0;
    for (const auto& s : sets) {
      if (s.intersects(hit)) continue;
      if (!s.intersects(blocked)) {
        blocked |= s;
        ++cnt;
      }
    }
    return cnt;
  };

  auto rec = [&](auto&& self, Bitset hit, int chosen) -> void {
    if (chosen >= best) return;
    // smallest uncovered hyperedge
    int pick = -1, picksz = universe + 1;
    for (int i = 0; i < int(sets.size()); ++i) {
      if (sets[i].intersects(hit)) continue;
      int sz = sets[i].count();
      if (sz < picksz) {
        picksz = sz;
        pick = i;
      }
    }
    if (pick == -1) {
      best = std::min(best, chosen);
      return;
    }
    if (chosen + pack_bound(hit) >= best) return;
    sets[pick].for_each([&](int v) {
      Bitset h2 = hit;
      h2.set(v);
      self(self, std::move(h2), chosen + 1);
    });
  };
  rec(rec, Bitset(universe), 0);
  return best;
}

int cover_number(const LineHypergraph& h, CoverMode mode) {
  // edge covers of the base correspond exactly to vertex covers of h
  int fast = h.base().order() - max_matching(h.base());
  bool check = mode == CoverMode::cross_check ||
               (mode == CoverMode::automatic && h.base().order() <= 14);
  if (check) {
    std::vector<Bitset> sets;
    for (int v = 0; v < h.hyperedge_count(); ++v) sets.push_back(h.hyperedge(v));
    int generic = minimum_hitting_set(h.vertex_count(), sets);
    if (generic != fast)
      raise(Err::InternalProofViolation,
            "cover fast path " + std::to_string(fast) + " != hitting set " +
                std::to_string(generic));
  }
  return fast;
}

std::optional<std::vector<Bitset>> r_partition(const LineHypergraph& h, int r) {
  if (!h.base().regular(r)) return std::nullopt;
  auto coloring = edge_colorable(h.base(), r);
  if (!coloring) return std::nullopt;
  std::vector<Bitset> classes(r, Bitset(h.vertex_count()));
  for (int e = 0; e < h.vertex_count(); ++e) classes[coloring->colors[e]].set(e);
  return classes;
}

std::vector<int> matching_from_independent_set(const LineHypergraph& h, const VertexSet& I) {
  if (I.capacity() != h.base().order())
    raise(Err::IndexOutOfRange, "vertex set capacity mismatch");
  bool indep = true;
  I.for_each([&](int v) {
    if (h.base().neighbors(v).intersects(I)) indep = false;
  });
  if (!indep) raise(Err::NotIndependent, "set is not independent in the base graph");
  return I.to_vector();  // hyperedge indices coincide with base vertices
}

VertexSet independent_set_from_matching(const LineHypergraph& h, const std::vector<int>& M) {
  VertexSet I(h.base().order());
  Bitset used(h.vertex_count());
  for (int v : M) {
    if (v < 0 || v >= h.hyperedge_count()) raise(Err::IndexOutOfRange, "hyperedge index");
    if (h.hyperedge(v).intersects(used))
      raise(Err::NotIndependent, "hyperedges are not pairwise disjoint");
    used |= h.hyperedge(v);
    I.set(v);
  }
  return I;
}

RyserReport ryser_report(const LineHypergraph& h, int r) {
  RyserReport rep;
  rep.nu = matching_number(h);
  rep.tau = cover_number(h);
  rep.bound = (r - 1) * rep.nu;
  rep.satisfied = rep.tau <= rep.bound;
  rep.extremal = rep.tau == rep.bound;
  return rep;
}

void write_hypergraph(const LineHypergraph& h, std::ostream& os) {
  os << "v " << h.vertex_count() << "\n";
  for (int v = 0; v < h.hyperedge_count(); ++v) {
    bool first = true;
    h.hyperedge(v).for_each([&](int e) {
      os << (first ? "" : " ") << e;
      first = false;
    });
    os << "\n";
  }
}

}  // namespace lhg
