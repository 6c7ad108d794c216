#pragma once

#include <map>
#include <optional>
#include <utility>

#include "lhg/graph.hpp"

namespace lhg {

using EdgePair = std::pair<int, int>;  // endpoints, any order

/// For gp(n,2) with n >= 26 and two edges e1, e2: a 0-based rung index i0
/// such that the segment of ten consecutive rungs starting at i0 avoids all
/// four endpoints. Follows the constructive case split (rotate one edge's
/// lower rung to the front; pick rung 4 or floor(n/2)+3 in 1-based terms
/// depending on where the other edge sits) and verifies disjointness by
/// direct enumeration before returning.
int find_free_segment(int n, EdgePair e1, EdgePair e2);

struct OracleTrace {
  int k = 0;
  std::optional<int> i0;  // free-segment start rung at the top level (0-based)
  std::optional<int> i1;  // chosen empty rung at the top level (0-based)
  VertexSet independent_set;
  int recursion_depth = 0;
};

/// Constructive witness that deleting any two edges' endpoints from
/// gp(5k+11, 2) leaves the independence number at 4k+8.
///
/// k <= 2 is answered by the exact solver (memoized); larger k recurses:
/// rotate the free segment to the last ten rungs, drop the last five rungs
/// (the remainder is gp(5(k-1)+11, 2) index-identically), recurse, pick an
/// empty rung i1 among the five rungs before the cut, keep the prefix, shift
/// the suffix by five rungs, and insert four fresh vertices around i1. Every
/// level re-verifies independence, size, endpoint avoidance, and the nine
/// boundary edges of the construction.
class IndependenceOracle {
 public:
  OracleTrace run(int k, EdgePair e1, EdgePair e2);

 private:
  VertexSet base_case(int k, const Graph& g, EdgePair e1, EdgePair e2);
  std::map<std::tuple<int, int, int, int, int>, VertexSet> memo_;
};

}  // namespace lhg
