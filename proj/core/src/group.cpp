#include "lhg/group.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "lhg/errors.hpp"

namespace lhg {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> rows,
                                    std::vector<std::string> names) {
  const int n = int(rows.size());
  if (n == 0) raise(Err::NoIdentity, "empty table");
  if (n > kMaxOrder) raise(Err::OrderTooLarge, "order " + std::to_string(n));
  for (const auto& r : rows)
    if (int(r.size()) != n) raise(Err::NotLatinSquare, "table is not square");

  // Latin square: every row and column a permutation of 0..n-1
  std::vector<char> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      int x = rows[i][j];
      if (x < 0 || x >= n || seen[x])
        raise(Err::NotLatinSquare, "row " + std::to_string(i));
      seen[x] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      int x = rows[j][i];
      if (seen[x]) raise(Err::NotLatinSquare, "column " + std::to_string(i));
      seen[x] = 1;
    }
  }

  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = rows[e][x] == x && rows[x][e] == x;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) raise(Err::NoIdentity, "no two-sided identity element");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (rows[rows[a][b]][c] != rows[a][rows[b][c]])
          raise(Err::NotAssociative, "triple (" + std::to_string(a) + "," +
                                         std::to_string(b) + "," + std::to_string(c) + ")");

  FiniteGroup g;
  g.table_ = std::move(rows);
  g.identity_ = identity;
  g.inverse_.assign(n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (g.table_[x][y] == identity) g.inverse_[x] = y;
  if (names.empty()) {
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  } else if (int(names.size()) != n) {
    raise(Err::NotLatinSquare, "name count mismatch");
  }
  g.names_ = std::move(names);
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) raise(Err::UnknownDescriptor, "cyclic order must be positive");
  if (n > kMaxOrder) raise(Err::OrderTooLarge, "cyclic:" + std::to_string(n));
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return from_table(std::move(t));
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1) raise(Err::UnknownDescriptor, "dihedral parameter must be positive");
  const int o = 2 * n;
  if (o > kMaxOrder) raise(Err::OrderTooLarge, "dihedral:" + std::to_string(n));
  std::vector<std::vector<int>> t(o, std::vector<int>(o));
  for (int x = 0; x < o; ++x) {
    for (int y = 0; y < o; ++y) {
      int xr = x % n, yr = y % n;
      bool xs = x >= n, ys = y >= n;
      if (!xs && !ys) t[x][y] = (xr + yr) % n;                 // r^i r^j
      else if (!xs && ys) t[x][y] = n + (yr - xr + n) % n;     // r^i s r^j = s r^{j-i}
      else if (xs && !ys) t[x][y] = n + (xr + yr) % n;         // s r^i r^j
      else t[x][y] = (yr - xr + n) % n;                        // s r^i s r^j = r^{j-i}
    }
  }
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("r" + std::to_string(i));
  for (int i = 0; i < n; ++i) names.push_back("sr" + std::to_string(i));
  return from_table(std::move(t), std::move(names));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 6) raise(Err::UnknownDescriptor, "symmetric:n requires 1 <= n <= 6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int o = int(perms.size());
  if (o > kMaxOrder) raise(Err::OrderTooLarge, "symmetric:" + std::to_string(n));
  std::map<std::vector<int>, int> idx;
  for (int i = 0; i < o; ++i) idx[perms[i]] = i;
  std::vector<std::vector<int>> t(o, std::vector<int>(o));
  std::vector<int> comp(n);
  for (int i = 0; i < o; ++i) {
    for (int j = 0; j < o; ++j) {
      for (int x = 0; x < n; ++x) comp[x] = perms[i][perms[j][x]];
      t[i][j] = idx[comp];
    }
  }
  std::vector<std::string> names;
  for (const auto& q : perms) {
    std::string s;
    for (int x : q) s += char('0' + x);
    names.push_back(s);
  }
  return from_table(std::move(t), std::move(names));
}

FiniteGroup FiniteGroup::gl2_3() {
  struct M {
    int a, b, c, d;
    bool operator<(const M& o) const {
      return std::tie(a, b, c, d) < std::tie(o.a, o.b, o.c, o.d);
    }
    bool operator==(const M& o) const = default;
  };
  std::vector<M> els;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          if ((a * d - b * c) % 3 != 0) els.push_back({a, b, c, d});
  std::sort(els.begin(), els.end());
  M id{1, 0, 0, 1};
  auto it = std::find(els.begin(), els.end(), id);
  std::rotate(els.begin(), it, it + 1);  // identity first
  const int o = int(els.size());
  std::map<std::tuple<int, int, int, int>, int> idx;
  for (int i = 0; i < o; ++i) idx[{els[i].a, els[i].b, els[i].c, els[i].d}] = i;
  std::vector<std::vector<int>> t(o, std::vector<int>(o));
  for (int i = 0; i < o; ++i) {
    for (int j = 0; j < o; ++j) {
      const M &x = els[i], &y = els[j];
      int a = (x.a * y.a + x.b * y.c) % 3, b = (x.a * y.b + x.b * y.d) % 3;
      int c = (x.c * y.a + x.d * y.c) % 3, d = (x.c * y.b + x.d * y.d) % 3;
      t[i][j] = idx[{a, b, c, d}];
    }
  }
  std::vector<std::string> names;
  for (const auto& m : els) {
    char buf[16];
    snprintf(buf, sizeof buf, "[%d%d;%d%d]", m.a, m.b, m.c, m.d);
    names.push_back(buf);
  }
  return from_table(std::move(t), std::move(names));
}

int FiniteGroup::mul(int x, int y) const {
  if (x < 0 || y < 0 || x >= order() || y >= order())
    raise(Err::IndexOutOfRange, "group element");
  return table_[x][y];
}

int FiniteGroup::inv(int x) const {
  if (x < 0 || x >= order()) raise(Err::IndexOutOfRange, "group element");
  return inverse_[x];
}

int FiniteGroup::element_order(int x) const {
  if (x < 0 || x >= order()) raise(Err::IndexOutOfRange, "group element");
  int e = x, k = 1;
  while (e != identity_) {
    e = table_[e][x];
    ++k;
  }
  return k;
}

bool FiniteGroup::abelian() const {
  for (int x = 0; x < order(); ++x)
    for (int y = x + 1; y < order(); ++y)
      if (table_[x][y] != table_[y][x]) return false;
  return true;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const long o = long(a.order()) * b.order();
  if (o > FiniteGroup::kMaxOrder)
    raise(Err::OrderTooLarge, "product order " + std::to_string(o));
  const int nb = b.order();
  std::vector<std::vector<int>> t(o, std::vector<int>(o));
  for (int x = 0; x < int(o); ++x)
    for (int y = 0; y < int(o); ++y)
      t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  std::vector<std::string> names;
  for (int x = 0; x < int(o); ++x)
    names.push_back("(" + a.name(x / nb) + "," + b.name(x % nb) + ")");
  return FiniteGroup::from_table(std::move(t), std::move(names));
}

namespace {

FiniteGroup build_atom(std::string_view d) {
  auto colon = d.find(':');
  std::string head(d.substr(0, colon));
  if (head == "gl2_3") {
    if (colon != std::string_view::npos) raise(Err::UnknownDescriptor, std::string(d));
    return FiniteGroup::gl2_3();
  }
  if (colon == std::string_view::npos) raise(Err::UnknownDescriptor, std::string(d));
  std::string arg(d.substr(colon + 1));
  if (head == "table") return load_cayley_table(arg);
  int n = 0;
  try {
    size_t used = 0;
    n = std::stoi(arg, &used);
    if (used != arg.size()) raise(Err::UnknownDescriptor, std::string(d));
  } catch (const std::logic_error&) {
    raise(Err::UnknownDescriptor, std::string(d));
  }
  if (head == "cyclic") return FiniteGroup::cyclic(n);
  if (head == "dihedral") return FiniteGroup::dihedral(n);
  if (head == "symmetric") return FiniteGroup::symmetric(n);
  raise(Err::UnknownDescriptor, std::string(d));
}

}  // namespace

FiniteGroup builtin_group(std::string_view descriptor) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  for (size_t i = 0; i <= descriptor.size(); ++i) {
    if (i == descriptor.size() || descriptor[i] == '*') {
      parts.push_back(descriptor.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.empty() || parts.front().empty())
    raise(Err::UnknownDescriptor, std::string(descriptor));
  FiniteGroup g = build_atom(parts[0]);
  for (size_t i = 1; i < parts.size(); ++i) g = direct_product(g, build_atom(parts[i]));
  return g;
}

FiniteGroup load_cayley_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Err::IoError, "cannot open " + path);
  std::string word;
  int n = 0;
  if (!(in >> word) || word != "order" || !(in >> n) || n <= 0)
    raise(Err::ParseError, path + ": expected 'order n'");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> rows[i][j])) raise(Err::ParseError, path + ": truncated table");
  std::vector<std::string> names;
  if (in >> word) {
    if (word != "names") raise(Err::ParseError, path + ": unexpected trailing data");
    std::string nm;
    while (in >> nm) names.push_back(nm);
  }
  return FiniteGroup::from_table(std::move(rows), std::move(names));
}

GeneratorBindings load_bindings(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Err::IoError, "cannot open " + path);
  GeneratorBindings b;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    std::string lhs, eq;
    int val;
    if (!(ss >> lhs)) continue;
    if (!(ss >> eq >> val) || eq != "=")
      raise(Err::ParseError, path + ": expected 'f_k = index', got '" + line + "'");
    size_t p = 0;
    if (lhs.size() < 2 || lhs[0] != 'f') raise(Err::ParseError, path + ": bad generator " + lhs);
    p = lhs[1] == '_' ? 2 : 1;
    int k = std::stoi(lhs.substr(p));
    b.f[k] = val;
  }
  return b;
}

int evaluate_word(const FiniteGroup& g, std::string_view word,
                  const GeneratorBindings* bindings) {
  // strip whitespace
  std::string w;
  for (char c : word)
    if (!isspace((unsigned char)c)) w.push_back(c);
  if (w.empty()) return g.identity();

  int acc = g.identity();
  size_t start = 0;
  for (size_t i = 0; i <= w.size(); ++i) {
    if (i != w.size() && w[i] != '*') continue;
    std::string tok = w.substr(start, i - start);
    start = i + 1;
    if (tok.empty()) raise(Err::ParseError, "empty factor in word '" + std::string(word) + "'");
    int elem, exp = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      exp = std::stoi(tok.substr(caret + 1));
      tok.resize(caret);
    }
    if (tok[0] == 'f') {
      size_t p = tok.size() > 1 && tok[1] == '_' ? 2 : 1;
      int k = std::stoi(tok.substr(p));
      if (!bindings || !bindings->f.count(k))
        raise(Err::UnboundGenerator, "f" + std::to_string(k));
      elem = bindings->f.at(k);
    } else {
      size_t used = 0;
      elem = std::stoi(tok, &used);
      if (used != tok.size())
        raise(Err::ParseError, "bad factor '" + tok + "'");
    }
    if (elem < 0 || elem >= g.order()) raise(Err::IndexOutOfRange, "element " + tok);
    if (exp < 0) {
      elem = g.inv(elem);
      exp = -exp;
    }
    for (int e = 0; e < exp; ++e) acc = g.mul(acc, elem);
  }
  return acc;
}

GroupRef parse_group_descriptor(std::string_view text) {
  GroupRef ref;
  auto at = text.find('@');
  std::string_view desc = text.substr(0, at);
  ref.descriptor = std::string(text);
  ref.group = std::make_shared<FiniteGroup>(builtin_group(desc));
  if (at != std::string_view::npos)
    ref.bindings = load_bindings(std::string(text.substr(at + 1)));
  return ref;
}

}  // namespace lhg
