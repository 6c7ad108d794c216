#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <functional>

#include "doctest.h"
#include "lhg/errors.hpp"
#include "lhg/families.hpp"
#include "lhg/graph6.hpp"
#include "lhg/isomorphism.hpp"
#include "lhg/solvers.hpp"

using namespace lhg;

static bool throws_kind(Err kind, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

TEST_CASE("gen_petersen") {
  Graph pet = gen_petersen(5, 2);
  CHECK(pet.order() == 10);
  CHECK(pet.regular(3));
  CHECK(metrics(pet).girth == 5);

  Graph g = gen_petersen(11, 2);
  CHECK(g.order() == 22);
  CHECK(g.size() == 33);
  CHECK(g.regular(3));
  CHECK(metrics(g).connected);

  CHECK(gen_petersen(19, 7).order() == 38);

  CHECK(throws_kind(Err::DegenerateParameter, [] { gen_petersen(7, 0); }));
  CHECK(throws_kind(Err::DegenerateParameter, [] { gen_petersen(6, 3); }));

  // regularity and size across a parameter sweep
  for (int n = 5; n <= 16; ++n)
    for (int k = 1; k < n; ++k) {
      if (2 * k % n == 0) continue;
      Graph h = gen_petersen(n, k);
      CHECK(h.order() == 2 * n);
      CHECK(h.size() == 3 * n);
      CHECK(h.regular(3));
    }
}

TEST_CASE("supergen_petersen") {
  // sgp(2,n;1,k) is gp(n,k) up to relabeling
  CHECK(isomorphic(supergen_petersen(2, 11, std::vector<int>{1, 2}), gen_petersen(11, 2)));
  for (int n = 5; n <= 20; ++n)
    for (int k = 2; k <= 3; ++k) {
      if (2 * k % n == 0) continue;
      CHECK(isomorphic(supergen_petersen(2, n, std::vector<int>{1, k}), gen_petersen(n, k)));
    }

  Graph s = supergen_petersen(3, 5, std::vector<int>{1, 1, 2});
  CHECK(s.order() == 15);
  CHECK(s.regular(4));

  CHECK(throws_kind(Err::DegenerateParameter,
                    [] { supergen_petersen(2, 6, std::vector<int>{1, 3}); }));
}

TEST_CASE("cayley_gen_petersen") {
  FiniteGroup z35 = FiniteGroup::cyclic(35);
  Graph g = cayley_gen_petersen(2, z35, std::vector<int>{5, 7}, std::vector<int>{15, 0});
  CHECK(g.order() == 70);
  CHECK(g.regular(4));
  auto m = metrics(g);
  CHECK(m.connected);
  CHECK(m.diameter == 5);
  CHECK(m.girth == 5);

  FiniteGroup z28 = FiniteGroup::cyclic(28);
  Graph h = cayley_gen_petersen(3, z28, std::vector<int>{18, 19, 5}, std::vector<int>{18, 0, 14});
  CHECK(h.order() == 84);
  CHECK(h.regular(4));
  CHECK(metrics(h).diameter == 6);
  CHECK(metrics(h).girth == 5);

  FiniteGroup z51 = FiniteGroup::cyclic(51);
  Graph q = cayley_gen_petersen(2, z51, std::vector<int>{3, 26}, std::vector<int>{47, 0});
  CHECK(q.order() == 102);
  CHECK(metrics(q).diameter == 6);
  CHECK(metrics(q).girth == 5);

  // degenerate parameters
  CHECK(throws_kind(Err::DegenerateParameter, [&] {
    cayley_gen_petersen(2, z35, std::vector<int>{0, 7}, std::vector<int>{15, 0});
  }));
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  CHECK(throws_kind(Err::DegenerateParameter, [&] {
    cayley_gen_petersen(2, z4, std::vector<int>{2, 1}, std::vector<int>{1, 0});  // 2 = -2
  }));
  // coinciding cross families (c_0 = c_1^-1) are a construction error
  CHECK(throws_kind(Err::EdgeCollision, [&] {
    cayley_gen_petersen(2, z35, std::vector<int>{5, 7}, std::vector<int>{15, 20});
  }));
}

TEST_CASE("cgp rows with non-abelian groups") {
  GroupRef g423 = parse_group_descriptor("cyclic:7*symmetric:3@data/groups/g42_3.gen");
  CHECK(g423.group->element_order(g423.bindings.f.at(1)) == 2);
  CHECK(g423.group->element_order(g423.bindings.f.at(2)) == 7);
  CHECK(g423.group->element_order(g423.bindings.f.at(3)) == 3);
  int k0 = evaluate_word(*g423.group, "f2*f3", &g423.bindings);
  int k1 = evaluate_word(*g423.group, "f2^2*f3", &g423.bindings);
  int c0 = evaluate_word(*g423.group, "f1*f2", &g423.bindings);
  Graph a = cayley_gen_petersen(2, *g423.group, std::vector<int>{k0, k1},
                                std::vector<int>{c0, g423.group->identity()});
  CHECK(a.order() == 84);
  CHECK(a.regular(4));
  CHECK(metrics(a).diameter == 5);
  CHECK(metrics(a).girth == 5);

  GroupRef g424 = parse_group_descriptor("cyclic:3*dihedral:7@data/groups/g42_4.gen");
  CHECK(g424.group->element_order(g424.bindings.f.at(1)) == 2);
  CHECK(g424.group->element_order(g424.bindings.f.at(2)) == 3);
  CHECK(g424.group->element_order(g424.bindings.f.at(3)) == 7);
  Graph b = build_graph(parse_family_spec(
      "cgp:2,cyclic:3*dihedral:7@data/groups/g42_4.gen,[f2*f3,f2*f3^2],[f1*f2,0]"));
  CHECK(b.order() == 84);
  CHECK(b.regular(4));
  CHECK(metrics(b).diameter == 5);
  CHECK(metrics(b).girth == 5);
}

TEST_CASE("permutation_graph") {
  Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  Graph prism = permutation_graph(k3, std::vector<int>{0, 1, 2});
  CHECK(prism.order() == 6);
  CHECK(prism.regular(3));
  CHECK(metrics(prism).girth == 3);

  // cycle permutation x -> 2x gives gp(n,2) for co-prime n
  Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  std::vector<int> dbl{0, 2, 4, 1, 3};
  CHECK(isomorphic(permutation_graph(c5, dbl), gen_petersen(5, 2)));

  Graph c7 = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}});
  std::vector<int> dbl7{0, 2, 4, 6, 1, 3, 5};
  CHECK(isomorphic(permutation_graph(c7, dbl7), gen_petersen(7, 2)));

  // d-regular base gives (d+1)-regular permutation graph
  Graph q = gen_petersen(6, 2);
  std::vector<int> id(q.order());
  for (size_t i = 0; i < id.size(); ++i) id[i] = int(i);
  CHECK(permutation_graph(q, id).regular(4));

  CHECK(throws_kind(Err::NotAPermutation, [&] {
    permutation_graph(k3, std::vector<int>{0, 0, 1});
  }));
}

TEST_CASE("cayley_graph") {
  FiniteGroup z6 = FiniteGroup::cyclic(6);
  Graph c6 = cayley_graph(z6, std::vector<int>{1, 5});
  CHECK(c6.regular(2));
  CHECK(metrics(c6).girth == 6);

  // self-inverse single generator: a perfect matching
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  Graph pm = cayley_graph(z4, std::vector<int>{2});
  CHECK(pm.regular(1));
  CHECK(pm.size() == 2);

  // dihedral reflections give K3,3
  FiniteGroup d3 = FiniteGroup::dihedral(3);
  Graph k33 = cayley_graph(d3, std::vector<int>{3, 4, 5});
  Graph ref = Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                                    {2, 3}, {2, 4}, {2, 5}});
  CHECK(isomorphic(k33, ref));

  CHECK(throws_kind(Err::IdentityInConnectionSet,
                    [&] { cayley_graph(z6, std::vector<int>{0, 1}); }));
  CHECK(throws_kind(Err::AsymmetricConnectionSet,
                    [&] { cayley_graph(z6, std::vector<int>{1}); }));
}

TEST_CASE("rung view") {
  Graph g = gen_petersen(11, 2);
  RungView rv = rung_view(g);
  CHECK(rv.n() == 11);
  CHECK(rv.a(3) == 6);
  CHECK(rv.b(3) == 7);
  CHECK(rv.rung_of(rv.a(3)) == 3);
  CHECK(rv.rung_of(rv.b(3)) == 3);
  CHECK(rv.segment(0, 5).count() == 10);
  CHECK(rv.segment(8, 5).count() == 10);  // wraps
  CHECK(rv.rung(10).count() == 2);

  // the five-rung segment bound on alpha
  for (int i = 0; i < 11; ++i) {
    auto del = delete_vertices(g, g.full_vertex_set() - rv.segment(i, 5));
    CHECK(max_independent_set(del.graph).alpha <= 4);
  }

  CHECK(throws_kind(Err::NotAGpGraph, [] {
    rung_view(Graph::from_edges(6, {{0, 1}, {2, 3}, {4, 5}}));
  }));
}

TEST_CASE("family spec parse and round trip") {
  FamilySpec gp = parse_family_spec("gp:11,2");
  CHECK(to_string(gp) == "gp:11,2");
  CHECK(build_graph(gp).order() == 22);

  FamilySpec cgp = parse_family_spec("cgp:2,cyclic:35,[5,7],[15,0]");
  CHECK(to_string(cgp) == "cgp:2,cyclic:35,[5,7],[15,0]");
  CHECK(build_graph(cgp).order() == 70);

  FamilySpec sgp = parse_family_spec("sgp:2,11,1,2");
  CHECK(build_graph(sgp).order() == 22);

  std::string g6 = encode_graph6(Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}));
  FamilySpec perm = parse_family_spec("perm:" + g6 + ",0 1 2");
  CHECK(build_graph(perm).order() == 6);

  FamilySpec cay = parse_family_spec("cayley:cyclic:6,{1,5}");
  CHECK(build_graph(cay).regular(2));

  CHECK(throws_kind(Err::ParseError, [] { parse_family_spec("gp:11"); }));
  CHECK(throws_kind(Err::ParseError, [] { parse_family_spec("zzz:1,2"); }));
}
