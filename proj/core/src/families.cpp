#include "lhg/families.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lhg/errors.hpp"
#include "lhg/graph6.hpp"

namespace lhg {

namespace {

// collects edges and rejects duplicates across calls (families must not
// silently collapse colliding edge orbits)
struct EdgeCollector {
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> edges;

  void add(int u, int v, const char* what) {
    if (u > v) std::swap(u, v);
    if (u == v) raise(Err::DegenerateParameter, std::string(what) + " produces a loop");
    if (!seen.insert({u, v}).second)
      raise(Err::EdgeCollision, std::string(what) + " duplicates edge (" + std::to_string(u) +
                                    "," + std::to_string(v) + ")");
    edges.emplace_back(u, v);
  }
  // same-family orbit edges are generated from both endpoints; collapse those
  void add_orbit(int u, int v, const char* what) {
    if (u > v) std::swap(u, v);
    if (u == v) raise(Err::DegenerateParameter, std::string(what) + " produces a loop");
    if (seen.insert({u, v}).second) edges.emplace_back(u, v);
  }
};

}  // namespace

Graph gen_petersen(int n, int k) {
  if (n < 3) raise(Err::DegenerateParameter, "gp requires n >= 3");
  k = ((k % n) + n) % n;
  if (k == 0) raise(Err::DegenerateParameter, "gp requires k != 0");
  if (2 * k % n == 0) raise(Err::DegenerateParameter, "gp requires 2k != 0 mod n");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) {
    es.emplace_back(2 * i, 2 * ((i + 1) % n));          // outer cycle a_i a_{i+1}
    es.emplace_back(2 * i + 1, 2 * ((i + k) % n) + 1);  // inner b_i b_{i+k}
    es.emplace_back(2 * i, 2 * i + 1);                  // spoke
  }
  return Graph::from_edges(2 * n, es);
}

Graph supergen_petersen(int m, int n, std::span<const int> ks) {
  if (m < 2) raise(Err::DegenerateParameter, "sgp requires m >= 2");
  if (n < 3) raise(Err::DegenerateParameter, "sgp requires n >= 3");
  if (int(ks.size()) != m) raise(Err::DegenerateParameter, "sgp needs m values k_i");
  EdgeCollector ec;
  for (int i = 0; i < m; ++i) {
    int k = ((ks[i] % n) + n) % n;
    if (k == 0 || 2 * k % n == 0)
      raise(Err::DegenerateParameter, "sgp k_" + std::to_string(i) + " degenerate");
    for (int j = 0; j < n; ++j) ec.add_orbit(i * n + j, i * n + (j + k) % n, "inner orbit");
  }
  // spokes; for m = 2 the two layers generate the same set
  std::set<std::pair<int, int>> spokes;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      int u = i * n + j, v = ((i + 1) % m) * n + j;
      if (u > v) std::swap(u, v);
      spokes.insert({u, v});
    }
  for (auto [u, v] : spokes) ec.add(u, v, "spoke");
  return Graph::from_edges(m * n, ec.edges);
}

Graph cayley_gen_petersen(int m, const FiniteGroup& group, std::span<const int> ks,
                          std::span<const int> cs) {
  if (m < 2) raise(Err::DegenerateParameter, "cgp requires m >= 2");
  if (int(ks.size()) != m || int(cs.size()) != m)
    raise(Err::DegenerateParameter, "cgp needs m values k_i and m values c_i");
  const int o = group.order();
  for (int i = 0; i < m; ++i) {
    if (ks[i] == group.identity())
      raise(Err::DegenerateParameter, "cgp k_" + std::to_string(i) + " is the identity");
    if (ks[i] == group.inv(ks[i]))
      raise(Err::DegenerateParameter, "cgp k_" + std::to_string(i) + " is an involution");
  }
  if (m == 2 && cs[0] == group.inv(cs[1]))
    raise(Err::EdgeCollision, "cgp m=2 cross families coincide (c_0 = c_1^-1)");
  EdgeCollector ec;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < o; ++j)
      ec.add_orbit(i * o + j, i * o + group.mul(j, ks[i]), "inner orbit");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < o; ++j)
      ec.add(i * o + j, ((i + 1) % m) * o + group.mul(j, cs[i]), "cross family");
  return Graph::from_edges(m * o, ec.edges);
}

Graph permutation_graph(const Graph& base, std::span<const int> perm) {
  const int n = base.order();
  if (int(perm.size()) != n) raise(Err::NotAPermutation, "length mismatch");
  std::vector<char> hit(n, 0);
  for (int x : perm) {
    if (x < 0 || x >= n || hit[x]) raise(Err::NotAPermutation, "not a bijection");
    hit[x] = 1;
  }
  std::vector<std::pair<int, int>> es;
  for (auto [u, v] : base.edges()) {
    es.emplace_back(u, v);
    es.emplace_back(n + u, n + v);
  }
  for (int v = 0; v < n; ++v) es.emplace_back(v, n + perm[v]);
  return Graph::from_edges(2 * n, es);
}

Graph cayley_graph(const FiniteGroup& group, std::span<const int> connection) {
  std::set<int> conn(connection.begin(), connection.end());
  if (conn.count(group.identity()))
    raise(Err::IdentityInConnectionSet, "identity in connection set");
  for (int s : conn) {
    if (s < 0 || s >= group.order()) raise(Err::IndexOutOfRange, "connection element");
    if (!conn.count(group.inv(s)))
      raise(Err::AsymmetricConnectionSet,
            "element " + std::to_string(s) + " without its inverse");
  }
  std::vector<std::pair<int, int>> es;
  for (int j = 0; j < group.order(); ++j)
    for (int s : conn) es.emplace_back(j, group.mul(j, s));
  return Graph::from_edges(group.order(), es);
}

RungView::RungView(const Graph& g) : g_(&g), n_(g.order() / 2) {
  if (g.order() < 6 || g.order() % 2 != 0) raise(Err::NotAGpGraph, "order not 2n, n >= 3");
  for (int i = 0; i < n_; ++i) {
    if (!g.adjacent(2 * i, 2 * i + 1)) raise(Err::NotAGpGraph, "missing spoke at rung " + std::to_string(i));
    if (!g.adjacent(2 * i, 2 * ((i + 1) % n_)))
      raise(Err::NotAGpGraph, "missing outer edge at rung " + std::to_string(i));
  }
}

VertexSet RungView::rung(int i) const {
  VertexSet s(g_->order());
  s.set(a(i));
  s.set(b(i));
  return s;
}

VertexSet RungView::segment(int i, int len) const {
  VertexSet s(g_->order());
  for (int j = 0; j < len; ++j) {
    s.set(a(i + j));
    s.set(b(i + j));
  }
  return s;
}

// ---- FamilySpec -------------------------------------------------------

Graph build_graph(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> Graph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GpSpec>) {
          return gen_petersen(s.n, s.k);
        } else if constexpr (std::is_same_v<T, SgpSpec>) {
          return supergen_petersen(s.m, s.n, s.ks);
        } else if constexpr (std::is_same_v<T, CgpSpec>) {
          return cayley_gen_petersen(s.m, *s.group, s.ks, s.cs);
        } else if constexpr (std::is_same_v<T, PermSpec>) {
          return permutation_graph(decode_graph6(s.base_graph6), s.perm);
        } else {
          return cayley_graph(*s.group, s.connection);
        }
      },
      spec);
}

std::string to_string(const FamilySpec& spec) {
  std::ostringstream os;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GpSpec>) {
          os << "gp:" << s.n << "," << s.k;
        } else if constexpr (std::is_same_v<T, SgpSpec>) {
          os << "sgp:" << s.m << "," << s.n;
          for (int k : s.ks) os << "," << k;
        } else if constexpr (std::is_same_v<T, CgpSpec>) {
          os << "cgp:" << s.m << "," << s.group_desc << ",[";
          for (size_t i = 0; i < s.ks.size(); ++i) os << (i ? "," : "") << s.ks[i];
          os << "],[";
          for (size_t i = 0; i < s.cs.size(); ++i) os << (i ? "," : "") << s.cs[i];
          os << "]";
        } else if constexpr (std::is_same_v<T, PermSpec>) {
          os << "perm:" << s.base_graph6 << ",";
          for (size_t i = 0; i < s.perm.size(); ++i) os << (i ? " " : "") << s.perm[i];
        } else {
          os << "cayley:" << s.group_desc << ",{";
          for (size_t i = 0; i < s.connection.size(); ++i) os << (i ? "," : "") << s.connection[i];
          os << "}";
        }
      },
      spec);
  return os.str();
}

namespace {

// split on commas at bracket depth zero
std::vector<std::string> split_top(std::string_view s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '[' || c == '{') ++depth;
    if (c == ']' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<std::string> split_list(std::string_view s, char open, char close) {
  if (s.size() < 2 || s.front() != open || s.back() != close)
    raise(Err::ParseError, "expected " + std::string(1, open) + "..." + std::string(1, close) +
                               " list, got '" + std::string(s) + "'");
  std::vector<std::string> out;
  std::string cur;
  for (char c : s.substr(1, s.size() - 2)) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

int parse_int(const std::string& s) {
  size_t used = 0;
  int v = std::stoi(s, &used);
  if (used != s.size()) raise(Err::ParseError, "bad integer '" + s + "'");
  return v;
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    raise(Err::ParseError, "family spec needs 'kind:...': '" + std::string(text) + "'");
  std::string kind(text.substr(0, colon));
  auto fields = split_top(text.substr(colon + 1));
  try {
    if (kind == "gp") {
      if (fields.size() != 2) raise(Err::ParseError, "gp:n,k");
      return GpSpec{parse_int(fields[0]), parse_int(fields[1])};
    }
    if (kind == "sgp") {
      if (fields.size() < 3) raise(Err::ParseError, "sgp:m,n,k0,...");
      SgpSpec s{parse_int(fields[0]), parse_int(fields[1]), {}};
      for (size_t i = 2; i < fields.size(); ++i) s.ks.push_back(parse_int(fields[i]));
      return s;
    }
    if (kind == "cgp") {
      if (fields.size() != 4) raise(Err::ParseError, "cgp:m,<group>,[k...],[c...]");
      CgpSpec s;
      s.m = parse_int(fields[0]);
      GroupRef ref = parse_group_descriptor(fields[1]);
      s.group = ref.group;
      s.group_desc = ref.descriptor;
      for (const auto& w : split_list(fields[2], '[', ']'))
        s.ks.push_back(evaluate_word(*s.group, w, &ref.bindings));
      for (const auto& w : split_list(fields[3], '[', ']'))
        s.cs.push_back(evaluate_word(*s.group, w, &ref.bindings));
      return s;
    }
    if (kind == "perm") {
      if (fields.size() != 2) raise(Err::ParseError, "perm:<graph6>,<permutation>");
      PermSpec s;
      s.base_graph6 = fields[0];
      std::istringstream ss(fields[1]);
      int x;
      while (ss >> x) s.perm.push_back(x);
      return s;
    }
    if (kind == "cayley") {
      if (fields.size() != 2) raise(Err::ParseError, "cayley:<group>,{s1,...}");
      CayleySpec s;
      GroupRef ref = parse_group_descriptor(fields[0]);
      s.group = ref.group;
      s.group_desc = ref.descriptor;
      for (const auto& w : split_list(fields[1], '{', '}'))
        s.connection.push_back(evaluate_word(*s.group, w, &ref.bindings));
      return s;
    }
  } catch (const std::logic_error& e) {
    raise(Err::ParseError, "in '" + std::string(text) + "': " + e.what());
  }
  raise(Err::ParseError, "unknown family kind '" + kind + "'");
}

}  // namespace lhg
