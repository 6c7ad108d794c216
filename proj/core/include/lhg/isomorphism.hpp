#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lhg/graph.hpp"

namespace lhg {

/// Exact isomorphism test: iterative neighborhood refinement to partition the
/// vertices, then backtracking within compatible classes. Returns a bijection
/// map[v of g] = vertex of h preserving adjacency, or nullopt.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

inline bool isomorphic(const Graph& g, const Graph& h) {
  return find_isomorphism(g, h).has_value();
}

/// Per-vertex histogram of vertex counts by BFS distance (index d = number of
/// vertices at distance d); unreachable vertices are not counted.
std::vector<std::vector<int>> distance_histograms(const Graph& g);

/// Invariant tuple used to bucket graphs before exact isomorphism tests.
struct Fingerprint {
  int order = 0;
  std::vector<int> degree_sequence;  // sorted
  std::optional<int> girth;
  std::optional<int> diameter;
  uint64_t profile_hash = 0;  // hash of the sorted multiset of distance histograms

  bool operator==(const Fingerprint&) const = default;
  std::string to_string() const;
};

Fingerprint fingerprint(const Graph& g);

}  // namespace lhg
