#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lhg/graph.hpp"

namespace lhg {

/// Standard graph6 encoding: size header N(n), then the upper triangle
/// x(0,1) x(0,2) x(1,2) x(0,3) ... zero-padded to a multiple of six bits,
/// each group offset by 63. Orders up to 62 use the one-byte header, larger
/// orders (up to 258047) the '~' + 3-byte form.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view s);

/// One graph6 string per line; blank lines and an optional ">>graph6<<"
/// header are skipped.
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace lhg
