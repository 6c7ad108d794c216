#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lhg/families.hpp"

namespace lhg {

struct SearchFilters {
  bool connected = true;
  int min_girth = 0;
  int degree = 0;  // 0: defaults to r
};

struct SearchConfig {
  int m = 2;
  std::string group_desc;
  int r = 3;
  SearchFilters filters;
  bool dedupe = true;
  int workers = 1;
  uint64_t seed = 0;
  std::string out_path;
  std::string resume_path;  // previous results file to replay (must match out)
};

/// Key-value config file: lines "key = value", '#' comments. Keys: m, group,
/// r, connected, min_girth, degree, dedupe, workers, seed, out, resume.
SearchConfig parse_search_config(const std::string& path);

/// All cgp parameter tuples for the configured m and group, in deterministic
/// odometer order. k values run over non-involution representatives with
/// index(k) <= index(k^-1) (k and its inverse generate the same orbit); for
/// abelian groups c_{m-1} is pinned to the identity, since translating all
/// c_i by a constant relabels the same graph.
void for_each_spec(const SearchConfig& cfg, const std::function<void(const FamilySpec&)>& fn);
std::vector<FamilySpec> enumerate_specs(const SearchConfig& cfg);

struct SearchSummary {
  uint64_t total = 0;
  uint64_t duplicates = 0;
  uint64_t filtered = 0;
  uint64_t violated = 0;
  uint64_t counterexamples = 0;
  uint64_t errors = 0;
  uint64_t resumed = 0;
};

/// Runs the sweep: construct, filter, fingerprint-dedupe (exact isomorphism
/// inside buckets), verify survivors, and append one JSON record per spec to
/// cfg.out_path in enumeration order. Certificates are written next to the
/// results file under certs/. Identical config gives a byte-identical results
/// file; an interrupted file can be replayed with resume.
SearchSummary run_search(const SearchConfig& cfg);

}  // namespace lhg
