#include "lhg/oracle.hpp"

#include <algorithm>
#include <array>

#include "lhg/errors.hpp"
#include "lhg/families.hpp"
#include "lhg/solvers.hpp"

namespace lhg {

namespace {

int rung(int v) { return v / 2; }

// the lower endpoint of an edge in cyclic rung order: the one whose partner
// sits 0..2 rungs ahead
int lower_rung(int n, EdgePair e) {
  int rp = rung(e.first), rq = rung(e.second);
  int d = ((rq - rp) % n + n) % n;
  return d <= 2 ? rp : rq;
}

bool segment_avoids(int n, int i0, std::initializer_list<int> verts) {
  for (int v : verts) {
    int r = rung(v);
    int off = ((r - i0) % n + n) % n;
    if (off < 10) return false;
  }
  return true;
}

}  // namespace

int find_free_segment(int n, EdgePair e1, EdgePair e2) {
  if (n < 26) raise(Err::PreconditionViolated, "free segment needs n >= 26");
  const std::array<EdgePair, 2> edges{e1, e2};
  for (int which = 0; which < 2; ++which) {
    EdgePair a = edges[which], b = edges[1 - which];
    int base = lower_rung(n, a);
    // 1-based rung labels in the frame where `base` becomes rung 1
    auto frame = [&](int v) { return ((rung(v) - base) % n + n) % n + 1; };
    int rw = std::min(frame(b.first), frame(b.second));
    int i0_paper = rw > n / 2 ? 4 : n / 2 + 3;
    int i0 = (i0_paper - 1 + base) % n;
    if (segment_avoids(n, i0, {e1.first, e1.second, e2.first, e2.second})) return i0;
  }
  raise(Err::InternalProofViolation, "no free segment found for n = " + std::to_string(n));
}

OracleTrace IndependenceOracle::run(int k, EdgePair e1, EdgePair e2) {
  if (k < 0) raise(Err::PreconditionViolated, "k must be nonnegative");
  const int n = 5 * k + 11;
  Graph g = gen_petersen(n, 2);
  if (g.edge_index(e1.first, e1.second) < 0 || g.edge_index(e2.first, e2.second) < 0)
    raise(Err::PreconditionViolated, "inputs are not edges of gp(" + std::to_string(n) + ",2)");

  const int target = 4 * k + 8;
  OracleTrace trace;
  trace.k = k;

  if (k <= 2) {
    trace.independent_set = base_case(k, g, e1, e2);
    trace.recursion_depth = 0;
  } else {
    int i0 = find_free_segment(n, e1, e2);
    trace.i0 = i0;
    // rotate so the free segment covers the last ten rungs
    const int shift = ((n - 10 - i0) % n + n) % n;
    auto rot = [&](int v) { return 2 * ((rung(v) + shift) % n) + (v & 1); };
    auto unrot = [&](int v) { return 2 * ((rung(v) - shift + n) % n) + (v & 1); };
    EdgePair f1{rot(e1.first), rot(e1.second)};
    EdgePair f2{rot(e2.first), rot(e2.second)};
    for (int v : {f1.first, f1.second, f2.first, f2.second})
      if (rung(v) > n - 11)
        raise(Err::InternalProofViolation, "endpoint inside the free segment after rotation");

    // dropping the last five rungs leaves gp(n-5, 2) with identical labels
    OracleTrace sub = run(k - 1, f1, f2);
    const VertexSet& prev = sub.independent_set;

    // an empty rung among the five before the cut (the segment bound says
    // the previous set meets at most four of them)
    int i1 = -1;
    for (int i = n - 10; i <= n - 6; ++i) {
      if (!prev.test(2 * i) && !prev.test(2 * i + 1)) {
        i1 = i;
        break;
      }
    }
    if (i1 == -1) raise(Err::InternalProofViolation, "no empty rung before the cut");
    trace.i1 = i1;

    VertexSet grown(2 * n);
    prev.for_each([&](int v) {
      if (rung(v) <= i1)
        grown.set(v);  // prefix kept as-is
      else
        grown.set(v + 10);  // five rungs = ten vertex indices
    });
    grown.set(2 * (i1 + 1));      // a_{i1+1}
    grown.set(2 * (i1 + 2) + 1);  // b_{i1+2}
    grown.set(2 * (i1 + 3) + 1);  // b_{i1+3}
    grown.set(2 * (i1 + 4));      // a_{i1+4}

    // the nine edges joining the three segments of the construction must not
    // land inside the set
    auto A = [&](int i) { return 2 * (((i % n) + n) % n); };
    auto B = [&](int i) { return A(i) + 1; };
    const std::array<EdgePair, 9> boundary{{{A(i1), A(i1 + 1)},
                                            {B(i1), B(i1 + 2)},
                                            {B(i1 - 1), B(i1 + 1)},
                                            {A(i1 + 5), A(i1 + 6)},
                                            {B(i1 + 5), B(i1 + 7)},
                                            {B(i1 + 4), B(i1 + 6)},
                                            {A(n - 1), A(0)},
                                            {B(n - 2), B(0)},
                                            {B(n - 1), B(1)}}};
    for (auto [u, v] : boundary)
      if (grown.test(u) && grown.test(v))
        raise(Err::InternalProofViolation, "boundary edge inside the constructed set");

    VertexSet result(2 * n);
    grown.for_each([&](int v) { result.set(unrot(v)); });
    trace.independent_set = std::move(result);
    trace.recursion_depth = sub.recursion_depth + 1;
  }

  // full verification before returning, at every level
  const VertexSet& I = trace.independent_set;
  if (I.count() != target)
    raise(Err::InternalProofViolation,
          "set size " + std::to_string(I.count()) + " != " + std::to_string(target));
  bool independent = true;
  I.for_each([&](int v) {
    if (g.neighbors(v).intersects(I)) independent = false;
  });
  if (!independent) raise(Err::InternalProofViolation, "constructed set is not independent");
  for (int v : {e1.first, e1.second, e2.first, e2.second})
    if (I.test(v)) raise(Err::InternalProofViolation, "constructed set hits a deleted endpoint");
  return trace;
}

VertexSet IndependenceOracle::base_case(int k, const Graph& g, EdgePair e1, EdgePair e2) {
  std::array<int, 4> ends{e1.first, e1.second, e2.first, e2.second};
  std::sort(ends.begin(), ends.end());
  auto key = std::make_tuple(k, ends[0], ends[1], ends[2], ends[3]);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  VertexSet excl(g.order());
  for (int v : ends) excl.set(v);
  auto witness = has_independent_set(g, 4 * k + 8, excl);
  if (!witness)
    raise(Err::InternalProofViolation,
          "solver found no independent set of size " + std::to_string(4 * k + 8));
  memo_.emplace(key, *witness);
  return *witness;
}

}  // namespace lhg
