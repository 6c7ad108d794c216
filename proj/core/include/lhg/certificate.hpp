#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lhg {

/// Machine-checkable verification record for one graph. Serializes to a
/// stable JSON object whose keys are exactly these field names.
struct Certificate {
  std::string spec;    // family spec text, or "g6:<string>" for raw input
  std::string graph6;
  int order = 0;
  int degree = 0;
  int r = 0;
  int alpha = 0;
  bool edge_colorable = false;
  bool condition_holds = false;
  std::optional<std::vector<int>> violating_subset;  // r-1 edge indices
  uint64_t checks_done = 0;
  uint64_t checks_total = 0;
  int nu_line = 0;
  int tau_line = 0;
  bool ryser_satisfied = false;
  bool ryser_extremal = false;
  int64_t elapsed_ms = 0;
  std::string tool_version;

  std::string to_json() const;
  static Certificate from_json(const std::string& text);
};

}  // namespace lhg
