#include "lhg/solvers.hpp"

#include <algorithm>
#include <deque>

#include "lhg/errors.hpp"

namespace lhg {

namespace {

// ---------------------------------------------------------------- MIS ----

struct MisSolver {
  const Graph& g;
  int n;
  uint64_t nodes = 0;
  int best = -1;  // size of incumbent
  Bitset best_set;
  // decision mode: stop as soon as a set of size >= target exists
  bool decision = false;
  int target = 0;
  bool found = false;

  explicit MisSolver(const Graph& graph) : g(graph), n(graph.order()), best_set(graph.order()) {}

  int degree_in(int v, const Bitset& P) const { return g.neighbors(v).count_and(P); }

  // greedy independent set: repeatedly take the min-degree candidate,
  // lowest index on ties
  void greedy(Bitset P, Bitset& out) const {
    for (;;) {
      int pick = -1, pickdeg = n + 1;
      P.for_each([&](int v) {
        int d = degree_in(v, P);
        if (d < pickdeg) {
          pickdeg = d;
          pick = v;
        }
      });
      if (pick == -1) return;
      out.set(pick);
      P.reset(pick);
      P -= g.neighbors(pick);
    }
  }

  // partition candidates into cliques greedily; each clique contributes at
  // most one vertex, so the count bounds the independent set size
  int clique_cover_bound(const Bitset& P) const {
    std::vector<Bitset> cliques;
    int count = 0;
    P.for_each([&](int v) {
      for (auto& c : cliques) {
        if (c.subset_of(g.neighbors(v))) {
          c.set(v);
          return;
        }
      }
      cliques.emplace_back(n);
      cliques.back().set(v);
      ++count;
    });
    return count;
  }

  void record(const Bitset& cur, int csize) {
    if (csize > best) {
      best = csize;
      best_set = cur;
      if (decision && best >= target) found = true;
    }
  }

  // all remaining candidates have degree exactly 2 inside P: disjoint cycles
  void finish_cycles(const Bitset& P, Bitset cur, int csize) {
    Bitset left = P;
    for (int v0 = left.find_first(); v0 != -1; v0 = left.find_first()) {
      // walk the cycle from its lowest vertex, taking alternate vertices
      std::vector<int> ring{v0};
      int prev = -1, at = v0;
      for (;;) {
        int nxt = -1;
        g.neighbors(at).for_each([&](int u) {
          if (left.test(u) && u != prev && nxt == -1 && u != v0) nxt = u;
        });
        if (nxt == -1) break;
        ring.push_back(nxt);
        prev = at;
        at = nxt;
      }
      for (int v : ring) left.reset(v);
      int take = int(ring.size()) / 2;
      for (int i = 0; i < take; ++i) cur.set(ring[2 * i]);
      csize += take;
    }
    record(cur, csize);
  }

  void expand(Bitset P, Bitset cur, int csize) {
    ++nodes;
    for (;;) {
      if (found) return;
      // one sweep: apply isolated/pendant reductions, find max-degree vertex
      int branch_v = -1, branch_deg = -1;
      bool reduced = false;
      for (int v = 0; v < n && !reduced; ++v) {
        if (!P.test(v)) continue;
        int d = degree_in(v, P);
        if (d == 0) {
          cur.set(v);
          P.reset(v);
          ++csize;
          reduced = true;
        } else if (d == 1) {
          // a pendant candidate is in some maximum independent set
          cur.set(v);
          ++csize;
          Bitset drop = g.neighbors(v) & P;
          P.reset(v);
          P -= drop;
          reduced = true;
        } else if (d > branch_deg) {
          branch_deg = d;
          branch_v = v;
        }
      }
      if (reduced) continue;
      if (branch_v == -1) {  // P empty
        record(cur, csize);
        return;
      }
      if (branch_deg <= 2) {
        finish_cycles(P, cur, csize);
        return;
      }
      if (csize + P.count() <= best) return;
      if (csize + clique_cover_bound(P) <= best) return;

      // include branch_v
      {
        Bitset P2 = P;
        P2.reset(branch_v);
        P2 -= g.neighbors(branch_v);
        Bitset cur2 = cur;
        cur2.set(branch_v);
        expand(std::move(P2), std::move(cur2), csize + 1);
        if (found) return;
      }
      // exclude branch_v
      P.reset(branch_v);
      // loop continues with the reduced problem
    }
  }

  void run(const Bitset& candidates) {
    Bitset seed(n);
    greedy(candidates, seed);
    best = seed.count();
    best_set = seed;
    if (decision && best >= target) {
      found = true;
      return;
    }
    if (decision) best = target - 1;  // only sets of size >= target matter
    Bitset empty(n);
    expand(candidates, empty, 0);
  }
};

}  // namespace

IndependenceResult max_independent_set(const Graph& g) {
  MisSolver s(g);
  if (g.order() == 0) return {0, Bitset(0), 0};
  s.run(g.full_vertex_set());
  return {s.best, s.best_set, s.nodes};
}

std::optional<VertexSet> has_independent_set(const Graph& g, int target,
                                             const VertexSet& excluded) {
  if (excluded.capacity() != g.order())
    raise(Err::IndexOutOfRange, "excluded set capacity mismatch");
  if (target <= 0) return VertexSet(g.order());
  MisSolver s(g);
  s.decision = true;
  s.target = target;
  s.run(g.full_vertex_set() - excluded);
  if (!s.found) return std::nullopt;
  // trim the witness to exactly target vertices? keep as found; size >= target
  return s.best_set;
}

// ------------------------------------------------------- edge coloring ----

namespace {

struct EdgeColorSolver {
  const Graph& g;
  int r;
  std::vector<int> order;        // edge indices in DFS order
  std::vector<int> color;        // per edge index, -1 unset
  std::vector<uint32_t> used;    // per vertex bitmask of colors in use
  std::vector<int> uncolored_at; // per vertex count

  EdgeColorSolver(const Graph& graph, int colors)
      : g(graph), r(colors), color(graph.size(), -1), used(graph.order(), 0),
        uncolored_at(graph.order(), 0) {}

  bool solve() {
    const int n = g.order();
    const int m = g.size();
    for (int v = 0; v < n; ++v) uncolored_at[v] = g.degree(v);
    // DFS edge order from vertex 0 (then any unvisited component); every
    // edge is appended when first encountered
    std::vector<char> seen_v(n, 0), seen_e(m, 0);
    order.reserve(m);
    auto dfs = [&](auto&& self, int u) -> void {
      seen_v[u] = 1;
      g.neighbors(u).for_each([&](int v) {
        int e = g.edge_index(u, v);
        if (!seen_e[e]) {
          seen_e[e] = 1;
          order.push_back(e);
        }
        if (!seen_v[v]) self(self, v);
      });
    };
    for (int root = 0; root < n; ++root)
      if (!seen_v[root]) dfs(dfs, root);
    // pin colors of the first vertex's incident edges (symmetry breaking)
    if (n > 0) {
      int c = 0;
      bool ok = true;
      g.neighbors(0).for_each([&](int v) {
        if (c >= r) {
          ok = false;
          return;
        }
        assign(g.edge_index(0, v), c++);
      });
      if (!ok) return false;
    }
    return backtrack(0);
  }

  void assign(int e, int c) {
    auto [u, v] = g.edge(e);
    color[e] = c;
    used[u] |= 1u << c;
    used[v] |= 1u << c;
    uncolored_at[u]--;
    uncolored_at[v]--;
  }
  void unassign(int e) {
    auto [u, v] = g.edge(e);
    used[u] &= ~(1u << color[e]);
    used[v] &= ~(1u << color[e]);
    color[e] = -1;
    uncolored_at[u]++;
    uncolored_at[v]++;
  }

  bool endpoint_feasible(int v) const {
    uint32_t free = ~used[v] & ((1u << r) - 1);
    return std::popcount(free) >= uncolored_at[v];
  }

  bool backtrack(size_t pos) {
    while (pos < order.size() && color[order[pos]] >= 0) ++pos;
    if (pos == order.size()) return true;
    int e = order[pos];
    auto [u, v] = g.edge(e);
    uint32_t avail = ~(used[u] | used[v]) & ((1u << r) - 1);
    while (avail) {
      int c = std::countr_zero(avail);
      avail &= avail - 1;
      assign(e, c);
      if (endpoint_feasible(u) && endpoint_feasible(v) && backtrack(pos + 1)) return true;
      unassign(e);
    }
    return false;
  }
};

}  // namespace

std::optional<EdgeColoring> edge_colorable(const Graph& g, int r) {
  if (r < 0 || r > 31) raise(Err::IndexOutOfRange, "color count " + std::to_string(r));
  if (g.max_degree() > r) return std::nullopt;
  EdgeColorSolver s(g, r);
  if (!s.solve()) return std::nullopt;
  return EdgeColoring{std::move(s.color)};
}

// ------------------------------------------------------------ matching ----

int max_matching(const Graph& g) {
  if (g.size() == 0) return 0;
  Graph L = line_graph(g);
  const int cap = g.order() / 2;
  // a matching of size floor(n/2) is maximum outright; the decision form
  // exits as soon as the greedy seed or the search reaches the cap
  auto hit = has_independent_set(L, cap, Bitset(L.order()));
  if (hit) return cap;
  return max_independent_set(L).alpha;
}

// --------------------------------------------------------- hamiltonian ----

namespace {

struct HamSolver {
  const Graph& g;
  int n, m;
  uint64_t budget;
  uint64_t nodes = 0;
  bool out_of_budget = false;
  std::vector<int> cycle;

  // edge state: 0 undecided, 1 in, 2 out
  struct State {
    std::vector<int8_t> estate;
    std::vector<int8_t> deg_in, deg_avail;
    std::vector<int> dsu;
    int in_total = 0;
  };

  explicit HamSolver(const Graph& graph, uint64_t node_budget)
      : g(graph), n(graph.order()), m(graph.size()), budget(node_budget) {}

  int find(State& s, int v) const {
    while (s.dsu[v] != v) v = s.dsu[v] = s.dsu[s.dsu[v]];
    return v;
  }

  // returns false on contradiction
  bool apply(State& s, int e, int8_t val, std::deque<int>& queue_in, std::deque<int>& queue_out) {
    if (s.estate[e] == val) return true;
    if (s.estate[e] != 0) return false;
    s.estate[e] = val;
    auto [u, v] = g.edge(e);
    if (val == 1) {
      int ru = find(s, u), rv = find(s, v);
      if (ru == rv && s.in_total + 1 != n) return false;  // premature cycle
      s.dsu[ru] = rv;
      s.in_total++;
      for (int w : {u, v}) {
        if (++s.deg_in[w] > 2) return false;
        s.deg_avail[w]--;
        if (s.deg_in[w] == 2) queue_out.push_back(w);  // close remaining edges
        if (s.deg_avail[w] < 2 - s.deg_in[w]) return false;
        if (s.deg_avail[w] == 2 - s.deg_in[w] && s.deg_avail[w] > 0) queue_in.push_back(w);
      }
    } else {
      for (int w : {u, v}) {
        s.deg_avail[w]--;
        if (s.deg_avail[w] < 2 - s.deg_in[w]) return false;
        if (s.deg_avail[w] == 2 - s.deg_in[w] && s.deg_avail[w] > 0) queue_in.push_back(w);
      }
    }
    return true;
  }

  bool propagate(State& s, std::deque<int> queue_in, std::deque<int> queue_out) {
    while (!queue_in.empty() || !queue_out.empty()) {
      if (!queue_out.empty()) {
        int w = queue_out.front();
        queue_out.pop_front();
        bool ok = true;
        g.neighbors(w).for_each([&](int u) {
          if (!ok) return;
          int e = g.edge_index(w, u);
          if (s.estate[e] == 0 && !apply(s, e, 2, queue_in, queue_out)) ok = false;
        });
        if (!ok) return false;
      } else {
        int w = queue_in.front();
        queue_in.pop_front();
        if (s.deg_avail[w] != 2 - s.deg_in[w]) continue;  // stale entry
        bool ok = true;
        g.neighbors(w).for_each([&](int u) {
          if (!ok) return;
          int e = g.edge_index(w, u);
          if (s.estate[e] == 0 && !apply(s, e, 1, queue_in, queue_out)) ok = false;
        });
        if (!ok) return false;
      }
    }
    return true;
  }

  // every vertex must be reachable through non-out edges
  bool connected_enough(const State& s) const {
    std::vector<char> seen(n, 0);
    std::deque<int> q{0};
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      g.neighbors(u).for_each([&](int v) {
        int e = g.edge_index(u, v);
        if (s.estate[e] != 2 && !seen[v]) {
          seen[v] = 1;
          ++cnt;
          q.push_back(v);
        }
      });
    }
    return cnt == n;
  }

  bool complete(const State& s) const { return s.in_total == n; }

  void extract(const State& s) {
    cycle.clear();
    cycle.reserve(n);
    int prev = -1, at = 0;
    do {
      cycle.push_back(at);
      int nxt = -1;
      g.neighbors(at).for_each([&](int v) {
        int e = g.edge_index(at, v);
        if (s.estate[e] == 1 && v != prev && nxt == -1) nxt = v;
      });
      prev = at;
      at = nxt;
    } while (at != 0 && at != -1 && int(cycle.size()) <= n);
  }

  // deterministic branch choice: vertex with the tightest slack, lowest index;
  // branch on its lowest-index undecided edge
  int pick_edge(const State& s) const {
    int bestv = -1, bestslack = 1 << 30;
    for (int v = 0; v < n; ++v) {
      if (s.deg_in[v] == 2 || s.deg_avail[v] == 0) continue;
      int slack = s.deg_avail[v] - (2 - s.deg_in[v]);
      if (slack < bestslack) {
        bestslack = slack;
        bestv = v;
      }
    }
    if (bestv == -1) return -1;
    int beste = -1;
    g.neighbors(bestv).for_each([&](int u) {
      int e = g.edge_index(bestv, u);
      if (s.estate[e] == 0 && beste == -1) beste = e;
    });
    return beste;
  }

  bool search(State s) {
    if (++nodes > budget) {
      out_of_budget = true;
      return false;
    }
    if (!connected_enough(s)) return false;
    if (complete(s)) {
      for (int v = 0; v < n; ++v)
        if (s.deg_in[v] != 2) return false;
      extract(s);
      return int(cycle.size()) == n;
    }
    int e = pick_edge(s);
    if (e == -1) return false;
    for (int8_t val : {int8_t(1), int8_t(2)}) {
      State s2 = s;
      std::deque<int> qi, qo;
      if (apply(s2, e, val, qi, qo) && propagate(s2, std::move(qi), std::move(qo))) {
        if (search(std::move(s2))) return true;
        if (out_of_budget) return false;
      }
    }
    return false;
  }

  HamiltonianResult run() {
    HamiltonianResult res;
    if (n < 3) {
      res.status = HamiltonianResult::Status::none;
      return res;
    }
    State s;
    s.estate.assign(m, 0);
    s.deg_in.assign(n, 0);
    s.deg_avail.assign(n, 0);
    s.dsu.resize(n);
    for (int v = 0; v < n; ++v) {
      s.dsu[v] = v;
      s.deg_avail[v] = int8_t(g.degree(v));
      if (s.deg_avail[v] < 2) {
        res.status = HamiltonianResult::Status::none;
        return res;
      }
    }
    // force both edges of every degree-2 vertex
    std::deque<int> qi, qo;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) == 2) qi.push_back(v);
    bool feasible = propagate(s, std::move(qi), {});
    bool found = feasible && search(std::move(s));
    res.nodes_explored = nodes;
    if (found)
      res.status = HamiltonianResult::Status::cycle;
    else
      res.status = out_of_budget ? HamiltonianResult::Status::unknown
                                 : HamiltonianResult::Status::none;
    if (found) res.cycle = std::move(cycle);
    return res;
  }
};

}  // namespace

HamiltonianResult hamiltonian(const Graph& g, uint64_t node_budget) {
  HamSolver s(g, node_budget);
  return s.run();
}

}  // namespace lhg
