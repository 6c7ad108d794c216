#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lhg/graph.hpp"

namespace lhg {

struct CorpusExpectation {
  std::optional<int> order, diameter, girth;
  std::optional<bool> hamiltonian;
};

struct CorpusEntry {
  std::string name;
  std::string spec_text;    // family spec, or empty when graph6 is given
  std::string graph6;       // raw graph6 when spec_text is empty
  int r = 3;
  CorpusExpectation expected;
  std::string note;
  bool skip_match = false;  // provenance-ambiguous entries: report, don't gate
};

/// Loads every *.json entry in the directory (sorted by filename). Entries
/// carry name, r, one of spec | graph6 | graph6_file, expected {...}, and
/// optional note / skip_match. Relative file references resolve against the
/// corpus directory.
std::vector<CorpusEntry> load_corpus(const std::string& dir);

struct ReportRow {
  std::string name;
  int order = 0;
  std::optional<int> diameter, girth;
  std::string hamiltonian;  // yes | no | unknown
  bool edge_colorable = false;
  bool matched = true;      // expected metrics all reproduced
  bool counted = true;      // false for skip_match entries
  std::string detail;
};

struct Report {
  std::vector<ReportRow> rows;
  bool all_matched = true;
};

struct ReportOptions {
  uint64_t hamiltonian_budget = 50'000'000;
};

Report table_report(const std::vector<CorpusEntry>& corpus, const ReportOptions& opts = {});
std::string render_report(const Report& report);

}  // namespace lhg
