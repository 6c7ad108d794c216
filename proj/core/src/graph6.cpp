#include "lhg/graph6.hpp"

#include <fstream>

#include "lhg/errors.hpp"

namespace lhg {

namespace {
constexpr int kMaxOrder = 258047;  // 18-bit size field
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxOrder) raise(Err::OrderTooLarge, std::to_string(n) + " exceeds graph6 limit");
  std::string out;
  if (n <= 62) {
    out.push_back(char(n + 63));
  } else {
    out.push_back('~');
    out.push_back(char(((n >> 12) & 63) + 63));
    out.push_back(char(((n >> 6) & 63) + 63));
    out.push_back(char((n & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    const Bitset& row = g.neighbors(v);
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (row.test(u) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(char(acc + 63));
        acc = nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(char((acc << (6 - nbits)) + 63));
  return out;
}

Graph decode_graph6(std::string_view s) {
  for (char c : s)
    if (c < 63 || c > 126)
      raise(Err::InvalidCharacter, "byte " + std::to_string(int((unsigned char)c)));
  size_t pos = 0;
  long n = 0;
  if (s.empty()) raise(Err::MalformedHeader, "empty string");
  if (s[0] != '~') {
    n = s[0] - 63;
    pos = 1;
  } else {
    if (s.size() >= 2 && s[1] == '~')
      raise(Err::OrderTooLarge, "8-byte size header not supported");
    if (s.size() < 4) raise(Err::MalformedHeader, "truncated size field");
    n = (long(s[1] - 63) << 12) | (long(s[2] - 63) << 6) | long(s[3] - 63);
    pos = 4;
    if (n <= 62) raise(Err::MalformedHeader, "long form used for small order");
  }
  const long bits = n * (n - 1) / 2;
  const long need = (bits + 5) / 6;
  if (long(s.size()) - long(pos) != need)
    raise(s.size() - pos < size_t(need) ? Err::MalformedHeader : Err::TrailingBits,
          "body has " + std::to_string(s.size() - pos) + " bytes, expected " +
              std::to_string(need));
  std::vector<std::pair<int, int>> es;
  long bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      int byte = s[pos + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) es.emplace_back(u, v);
    }
  }
  // padding must be zero
  for (long b = bits; b < need * 6; ++b) {
    int byte = s[pos + b / 6] - 63;
    if ((byte >> (5 - b % 6)) & 1) raise(Err::TrailingBits, "nonzero padding");
  }
  return Graph::from_edges(int(n), es);
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Err::IoError, "cannot open " + path);
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty() || line.rfind(">>graph6<<", 0) == 0) continue;
    out.push_back(decode_graph6(line));
  }
  return out;
}

}  // namespace lhg
