#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <functional>
#include <random>
#include <sstream>

#include "doctest.h"
#include "lhg/errors.hpp"
#include "lhg/families.hpp"
#include "lhg/hypergraph.hpp"
#include "lhg/solvers.hpp"
#include "testutil.hpp"

using namespace lhg;

static bool throws_kind(Err kind, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

TEST_CASE("line hypergraph shape") {
  Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  LineHypergraph h = line_hypergraph(k3);
  CHECK(h.vertex_count() == 3);
  CHECK(h.hyperedge_count() == 3);
  for (int v = 0; v < 3; ++v) CHECK(h.hyperedge(v).count() == 2);

  LineHypergraph hg = line_hypergraph(gen_petersen(11, 2));
  CHECK(hg.vertex_count() == 33);
  CHECK(hg.hyperedge_count() == 22);
  CHECK(hg.uniformity() == 3);
  for (int v = 0; v < 22; ++v) CHECK(hg.hyperedge(v).count() == 3);

  Graph z35 = build_graph(parse_family_spec("cgp:2,cyclic:35,[5,7],[15,0]"));
  LineHypergraph hz = line_hypergraph(z35);
  CHECK(hz.vertex_count() == 140);
  CHECK(hz.hyperedge_count() == 70);
  CHECK(hz.uniformity() == 4);

  // every hypergraph vertex (edge uv) lies in exactly S(u) and S(v)
  for (int e = 0; e < hg.vertex_count(); ++e) {
    int cover = 0;
    for (int v = 0; v < hg.hyperedge_count(); ++v)
      if (hg.hyperedge(v).test(e)) ++cover;
    CHECK(cover == 2);
  }

  CHECK(throws_kind(Err::IsolatedVertex,
                    [] { line_hypergraph(Graph::from_edges(3, {{0, 1}})); }));
}

TEST_CASE("r_partition") {
  auto p = r_partition(line_hypergraph(gen_petersen(11, 2)), 3);
  REQUIRE(p.has_value());
  CHECK(p->size() == 3);
  // every hyperedge meets every class exactly once
  LineHypergraph h = line_hypergraph(gen_petersen(11, 2));
  for (int v = 0; v < h.hyperedge_count(); ++v)
    for (const auto& cls : *p) CHECK(h.hyperedge(v).count_and(cls) == 1);

  CHECK(!r_partition(line_hypergraph(gen_petersen(5, 2)), 3).has_value());

  Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(r_partition(line_hypergraph(k4), 3).has_value());

  // not regular: no partition
  Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  CHECK(!r_partition(line_hypergraph(p3), 2).has_value());
}

TEST_CASE("matching and cover numbers") {
  LineHypergraph h11 = line_hypergraph(gen_petersen(11, 2));
  CHECK(matching_number(h11) == 8);
  CHECK(cover_number(h11) == 11);

  LineHypergraph hk3 = line_hypergraph(Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(matching_number(hk3) == 1);
  CHECK(cover_number(hk3) == 2);

  LineHypergraph h52 = line_hypergraph(gen_petersen(5, 2));
  CHECK(matching_number(h52) == 4);

  Graph p2 = Graph::from_edges(2, {{0, 1}});
  CHECK(cover_number(line_hypergraph(p2)) == 1);
}

TEST_CASE("nu(L) equals alpha(G) and the sandwich bounds") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 12; ++trial) {
    Graph g = test::random_cubic_connected(10 + 2 * (trial % 4), rng);
    LineHypergraph h = line_hypergraph(g);
    int nu = matching_number(h);
    int tau = cover_number(h);
    int alpha = max_independent_set(g).alpha;
    CHECK(nu == alpha);
    CHECK(nu <= tau);
    CHECK(tau <= 3 * nu);
  }
}

TEST_CASE("gallai fast path vs hitting set") {
  std::mt19937_64 rng(5050);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 4 + int(rng() % 11);  // up to 14: cover_number cross-checks internally
    Graph g = test::random_graph(n, 0.4, rng());
    bool isolated = false;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) == 0) isolated = true;
    if (isolated || g.size() == 0) continue;
    LineHypergraph h = line_hypergraph(g);
    CHECK(cover_number(h, CoverMode::cross_check) == cover_number(h, CoverMode::fast_only));
  }
}

TEST_CASE("independent set / matching bijection") {
  Graph g = gen_petersen(11, 2);
  LineHypergraph h = line_hypergraph(g);
  auto mis = max_independent_set(g);
  auto matching = matching_from_independent_set(h, mis.witness);
  CHECK(matching.size() == 8);
  // pairwise disjoint
  Bitset used(h.vertex_count());
  for (int v : matching) {
    CHECK(!h.hyperedge(v).intersects(used));
    used |= h.hyperedge(v);
  }
  CHECK(independent_set_from_matching(h, matching) == mis.witness);

  CHECK(matching_from_independent_set(h, VertexSet(22)).empty());

  // random independent sets round-trip
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    VertexSet s(22);
    for (int tries = 0; tries < 12; ++tries) {
      int v = int(rng() % 22);
      if (!g.neighbors(v).intersects(s)) s.set(v);
    }
    CHECK(independent_set_from_matching(h, matching_from_independent_set(h, s)) == s);
  }

  VertexSet bad = Bitset::of(22, {0, 1});  // a_0 and b_0 are adjacent
  CHECK(throws_kind(Err::NotIndependent, [&] { matching_from_independent_set(h, bad); }));
}

TEST_CASE("ryser report") {
  auto r11 = ryser_report(line_hypergraph(gen_petersen(11, 2)), 3);
  CHECK(r11.nu == 8);
  CHECK(r11.tau == 11);
  CHECK(r11.bound == 16);
  CHECK(r11.satisfied);
  CHECK(!r11.extremal);

  auto r52 = ryser_report(line_hypergraph(gen_petersen(5, 2)), 3);
  CHECK(r52.nu == 4);
  CHECK(r52.satisfied);

  Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto rk4 = ryser_report(line_hypergraph(k4), 3);
  CHECK(rk4.nu == 1);
  CHECK(rk4.tau == 2);
  CHECK(rk4.satisfied);
}

TEST_CASE("text export") {
  Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  std::ostringstream os;
  write_hypergraph(line_hypergraph(k3), os);
  CHECK(os.str() == "v 3\n0 1\n0 2\n1 2\n");
}
