#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lhg/certificate.hpp"
#include "lhg/graph.hpp"

namespace lhg {

// saturating binomial coefficient
uint64_t binomial(uint64_t n, uint64_t k);
/// t-subset of {0..m-1} with the given lexicographic rank.
std::vector<int> unrank_combination(uint64_t m, int t, uint64_t rank);
/// Advances to the lexicographic successor; false after the last subset.
bool next_combination(std::vector<int>& c, int m);

enum class CheckMode { full, sample, resume };

struct VerifyOptions {
  CheckMode mode = CheckMode::full;
  int workers = 1;
  uint64_t sample_count = 2000;
  uint64_t seed = 0;
  std::string progress_path;  // resume mode: append-only "done <rank>" lines
  std::string spec_text;      // recorded in the certificate
};

/// Checks the independence condition behind the counterexample lemma: g must
/// be r-regular; alpha(g) is computed once, r-edge-colorability recorded, and
/// every (r-1)-subset S of edges (lexicographic order over sorted edge
/// indices) is checked for alpha(g - endpoints(S)) = alpha(g). Stops at the
/// first violation; with several workers the lowest-rank violation is
/// reported. condition_holds together with edge_colorable certifies the line
/// hypergraph as a counterexample.
Certificate lovasz_condition(const Graph& g, int r, const VerifyOptions& opts = {});

struct WeakResult {
  enum class Status { holds, refuted, budget_exceeded };
  Status status = Status::refuted;
  int k_used = 0;                  // when holds
  std::vector<int> witness_edges;  // hypergraph vertices whose removal drops nu by k
  std::vector<int> ks_completed;   // fully enumerated k values
  uint64_t checks_done = 0;
};

struct WeakOptions {
  int k_min = 1;
  int k_max = 0;  // 0: defaults to r-1
  uint64_t budget_per_k = 10'000'000;
};

/// Weakened form: some k in [1, r-1] admits k(r-1) hypergraph vertices (edges
/// of g) whose removal drops the matching number of the line hypergraph by at
/// least k, i.e. alpha(g - endpoints(T)) <= alpha(g) - k.
WeakResult weak_lovasz(const Graph& g, int r, const WeakOptions& opts = {});

}  // namespace lhg
