#include "lhg/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace lhg {

namespace {

// 1-dimensional refinement: classes start from (degree, distance histogram)
// and are split by the multiset of neighbor classes until stable.
std::vector<int> refine_classes(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> hist = distance_histograms(g);
  std::map<std::pair<int, std::vector<int>>, int> seed;
  std::vector<int> cls(n);
  for (int v = 0; v < n; ++v) {
    auto key = std::make_pair(g.degree(v), hist[v]);
    auto [it, fresh] = seed.emplace(key, int(seed.size()));
    cls[v] = it->second;
  }
  for (;;) {
    std::map<std::pair<int, std::vector<int>>, int> next;
    std::vector<int> ncls(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> sig;
      g.neighbors(v).for_each([&](int u) { sig.push_back(cls[u]); });
      std::sort(sig.begin(), sig.end());
      auto [it, fresh] = next.emplace(std::make_pair(cls[v], std::move(sig)), int(next.size()));
      ncls[v] = it->second;
    }
    bool changed = false;
    for (int v = 0; v < n; ++v)
      if (ncls[v] != cls[v]) changed = true;
    cls = std::move(ncls);
    if (!changed) break;
  }
  return cls;
}

// canonical class signature so class ids of g and h can be matched
std::map<std::vector<int>, std::vector<int>> classes_by_signature(const Graph& g,
                                                                  const std::vector<int>& cls) {
  // signature of a class: sorted list of (neighbor class, count) flattened,
  // prefixed with degree; refined classes already agree on these, so the
  // signature of any member represents the class
  std::map<std::vector<int>, std::vector<int>> out;
  const int n = g.order();
  int nc = 0;
  for (int v = 0; v < n; ++v) nc = std::max(nc, cls[v] + 1);
  std::vector<std::vector<int>> members(nc);
  for (int v = 0; v < n; ++v) members[cls[v]].push_back(v);
  for (int c = 0; c < nc; ++c) {
    int rep = members[c].front();
    // degree, class size, sorted neighbor-class sizes: an isomorphism
    // invariant of the class; colliding classes share a bucket, which only
    // weakens pruning, never correctness
    std::vector<int> sig{g.degree(rep), int(members[c].size())};
    std::vector<int> nbsizes;
    g.neighbors(rep).for_each([&](int u) { nbsizes.push_back(int(members[cls[u]].size())); });
    std::sort(nbsizes.begin(), nbsizes.end());
    sig.insert(sig.end(), nbsizes.begin(), nbsizes.end());
    out[sig].insert(out[sig].end(), members[c].begin(), members[c].end());
  }
  return out;
}

struct Matcher {
  const Graph& g;
  const Graph& h;
  std::vector<int> gcls, hcls;  // class ids aligned between the graphs
  std::vector<int> order;       // g vertices in matching order
  std::vector<int> map_gh;      // g -> h, -1 unset
  std::vector<char> used_h;

  bool feasible(int gv, int hv) {
    if (gcls[gv] != hcls[hv]) return false;
    bool ok = true;
    g.neighbors(gv).for_each([&](int u) {
      if (map_gh[u] >= 0 && !h.adjacent(hv, map_gh[u])) ok = false;
    });
    if (!ok) return false;
    // forward adjacency plus equal counts of mapped neighbors gives the
    // reverse direction too: the image of gv's mapped neighbors is then
    // exactly the set of used neighbors of hv
    int fwd = 0, rev = 0;
    g.neighbors(gv).for_each([&](int u) { fwd += map_gh[u] >= 0; });
    h.neighbors(hv).for_each([&](int u) { rev += used_h[u]; });
    return fwd == rev;
  }

  bool extend(size_t pos) {
    if (pos == order.size()) return true;
    int gv = order[pos];
    for (int hv = 0; hv < h.order(); ++hv) {
      if (used_h[hv] || !feasible(gv, hv)) continue;
      map_gh[gv] = hv;
      used_h[hv] = 1;
      if (extend(pos + 1)) return true;
      map_gh[gv] = -1;
      used_h[hv] = 0;
    }
    return false;
  }
};

}  // namespace

std::vector<std::vector<int>> distance_histograms(const Graph& g) {
  std::vector<std::vector<int>> out(g.order());
  for (int v = 0; v < g.order(); ++v) {
    auto d = bfs_distances(g, v);
    std::vector<int> histo;
    for (int x : d) {
      if (x < 0) continue;
      if (int(histo.size()) <= x) histo.resize(x + 1, 0);
      histo[x]++;
    }
    out[v] = std::move(histo);
  }
  return out;
}

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  const int n = g.order();
  if (n == 0) return std::vector<int>{};

  auto gc = refine_classes(g);
  auto hc = refine_classes(h);
  auto gsig = classes_by_signature(g, gc);
  auto hsig = classes_by_signature(h, hc);
  if (gsig.size() != hsig.size()) return std::nullopt;
  // align class ids across the two graphs by signature
  std::vector<int> gcls(n, -1), hcls(n, -1);
  int next_id = 0;
  for (auto git = gsig.begin(), hit = hsig.begin(); git != gsig.end(); ++git, ++hit) {
    if (git->first != hit->first || git->second.size() != hit->second.size())
      return std::nullopt;
    for (int v : git->second) gcls[v] = next_id;
    for (int v : hit->second) hcls[v] = next_id;
    ++next_id;
  }

  Matcher m{g, h, std::move(gcls), std::move(hcls), {}, std::vector<int>(n, -1),
            std::vector<char>(n, 0)};
  // match order: BFS from a vertex in the rarest class, so successive vertices
  // are constrained by mapped neighbors
  std::vector<int> class_size(next_id, 0);
  for (int v = 0; v < n; ++v) class_size[m.gcls[v]]++;
  int start = 0;
  for (int v = 1; v < n; ++v) {
    if (std::make_pair(class_size[m.gcls[v]], v) < std::make_pair(class_size[m.gcls[start]], start))
      start = v;
  }
  std::vector<char> seen(n, 0);
  std::vector<int> queue;
  auto push_component = [&](int s) {
    queue.push_back(s);
    seen[s] = 1;
    for (size_t qi = queue.size() - 1; qi < queue.size(); ++qi) {
      g.neighbors(queue[qi]).for_each([&](int u) {
        if (!seen[u]) {
          seen[u] = 1;
          queue.push_back(u);
        }
      });
    }
  };
  push_component(start);
  for (int v = 0; v < n; ++v)
    if (!seen[v]) push_component(v);
  m.order = std::move(queue);

  if (!m.extend(0)) return std::nullopt;
  return m.map_gh;
}

namespace {
uint64_t fnv1a(uint64_t h, uint64_t x) {
  for (int i = 0; i < 8; ++i) {
    h ^= (x >> (8 * i)) & 0xff;
    h *= 1099511628211ull;
  }
  return h;
}
}  // namespace

Fingerprint fingerprint(const Graph& g) {
  Fingerprint f;
  f.order = g.order();
  for (int v = 0; v < g.order(); ++v) f.degree_sequence.push_back(g.degree(v));
  std::sort(f.degree_sequence.begin(), f.degree_sequence.end());
  auto m = metrics(g);
  f.girth = m.girth;
  f.diameter = m.diameter;
  auto hist = distance_histograms(g);
  std::sort(hist.begin(), hist.end());
  uint64_t h = 1469598103934665603ull;
  for (const auto& row : hist) {
    h = fnv1a(h, row.size());
    for (int x : row) h = fnv1a(h, uint64_t(x));
  }
  f.profile_hash = h;
  return f;
}

std::string Fingerprint::to_string() const {
  std::string s = "n" + std::to_string(order);
  s += "/d";
  if (!degree_sequence.empty()) {
    s += std::to_string(degree_sequence.front());
    s += "-" + std::to_string(degree_sequence.back());
  }
  s += "/g" + (girth ? std::to_string(*girth) : std::string("inf"));
  s += "/D" + (diameter ? std::to_string(*diameter) : std::string("inf"));
  char buf[20];
  snprintf(buf, sizeof buf, "/%016llx", (unsigned long long)profile_hash);
  return s + buf;
}

}  // namespace lhg
