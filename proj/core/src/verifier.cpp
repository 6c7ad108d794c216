#include "lhg/verifier.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "json.hpp"
#include "lhg/errors.hpp"
#include "lhg/graph6.hpp"
#include "lhg/solvers.hpp"
#include "lhg/version.hpp"

namespace lhg {

uint64_t binomial(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr uint64_t cap = uint64_t(1) << 62;
  uint64_t r = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    if (r > cap / (n - k + i)) return cap;  // saturate
    r = r * (n - k + i) / i;
  }
  return r;
}

std::vector<int> unrank_combination(uint64_t m, int t, uint64_t rank) {
  std::vector<int> c(t);
  int x = 0;
  for (int i = 0; i < t; ++i) {
    for (;; ++x) {
      uint64_t block = binomial(m - 1 - x, t - 1 - i);
      if (rank < block) break;
      rank -= block;
    }
    c[i] = x++;
  }
  return c;
}

bool next_combination(std::vector<int>& c, int m) {
  const int t = int(c.size());
  int i = t - 1;
  while (i >= 0 && c[i] == m - t + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < t; ++j) c[j] = c[j - 1] + 1;
  return true;
}

namespace {

int64_t now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

VertexSet subset_endpoints(const Graph& g, const std::vector<int>& edge_subset) {
  VertexSet s(g.order());
  for (int e : edge_subset) {
    auto [u, v] = g.edge(e);
    s.set(u);
    s.set(v);
  }
  return s;
}

// contiguous verified prefix recorded as "done <rank>" lines
uint64_t read_progress(const std::string& path) {
  std::ifstream in(path);
  if (!in) return 0;
  uint64_t frontier = 0;
  std::string word;
  uint64_t r;
  while (in >> word >> r) {
    if (word != "done") raise(Err::ParseError, path + ": expected 'done <rank>'");
    frontier = std::max(frontier, r);
  }
  return frontier;
}

}  // namespace

Certificate lovasz_condition(const Graph& g, int r, const VerifyOptions& opts) {
  const int64_t t_start = now_ms();
  if (!g.regular(r))
    raise(Err::NotRegular, "graph is not " + std::to_string(r) + "-regular");

  Certificate cert;
  cert.spec = opts.spec_text.empty() ? "g6:" + encode_graph6(g) : opts.spec_text;
  cert.graph6 = encode_graph6(g);
  cert.order = g.order();
  cert.degree = g.max_degree();
  cert.r = r;
  cert.tool_version = kVersion;

  const int alpha = max_independent_set(g).alpha;
  cert.alpha = alpha;
  cert.edge_colorable = edge_colorable(g, r).has_value();

  const uint64_t m = g.size();
  const int t = r - 1;
  const uint64_t total = binomial(m, t);

  // the ranks to check: everything, or a seeded sample without replacement
  std::vector<uint64_t> sample;
  uint64_t work_total = total;
  uint64_t start_rank = 0;
  if (opts.mode == CheckMode::sample) {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<uint64_t> dist(0, total ? total - 1 : 0);
    std::set<uint64_t> picked;
    while (picked.size() < std::min<uint64_t>(opts.sample_count, total))
      picked.insert(dist(rng));
    sample.assign(picked.begin(), picked.end());
    work_total = sample.size();
  } else if (opts.mode == CheckMode::resume && !opts.progress_path.empty()) {
    start_rank = std::min(read_progress(opts.progress_path), total);
  }

  const uint64_t work_count = work_total - (opts.mode == CheckMode::resume ? start_rank : 0);
  const int workers = std::max(1, opts.workers);
  const uint64_t chunk =
      std::clamp<uint64_t>(work_count / (uint64_t(workers) * 32), 64, 1 << 16);

  std::atomic<uint64_t> next_chunk{0};
  std::atomic<uint64_t> min_violation{UINT64_MAX};  // work index, not rank
  const uint64_t nchunks = work_count == 0 ? 0 : (work_count + chunk - 1) / chunk;

  // progress frontier bookkeeping (resume mode)
  std::mutex progress_mu;
  std::set<uint64_t> done_chunks;
  uint64_t frontier_chunk = 0;
  std::ofstream progress_out;
  if (opts.mode == CheckMode::resume && !opts.progress_path.empty())
    progress_out.open(opts.progress_path, std::ios::app);

  auto work_rank = [&](uint64_t idx) -> uint64_t {
    if (opts.mode == CheckMode::sample) return sample[idx];
    return start_rank + idx;
  };

  auto worker = [&]() {
    for (;;) {
      uint64_t c = next_chunk.fetch_add(1);
      if (c >= nchunks) return;
      uint64_t lo = c * chunk, hi = std::min(work_count, lo + chunk);
      if (lo >= min_violation.load(std::memory_order_relaxed)) continue;
      std::vector<int> combo;
      bool contiguous = opts.mode != CheckMode::sample;
      if (contiguous) combo = unrank_combination(m, t, work_rank(lo));
      for (uint64_t i = lo; i < hi; ++i) {
        if (i >= min_violation.load(std::memory_order_relaxed)) break;
        if (!contiguous) combo = unrank_combination(m, t, work_rank(i));
        VertexSet del = subset_endpoints(g, combo);
        if (!has_independent_set(g, alpha, del)) {
          uint64_t cur = min_violation.load();
          while (i < cur && !min_violation.compare_exchange_weak(cur, i)) {
          }
          break;
        }
        if (contiguous && i + 1 < hi) next_combination(combo, int(m));
      }
      if (progress_out.is_open() && min_violation.load() == UINT64_MAX) {
        std::lock_guard lk(progress_mu);
        done_chunks.insert(c);
        bool advanced = false;
        while (done_chunks.count(frontier_chunk)) {
          done_chunks.erase(frontier_chunk);
          ++frontier_chunk;
          advanced = true;
        }
        if (advanced) {
          uint64_t done_rank = start_rank + std::min(frontier_chunk * chunk, work_count);
          progress_out << "done " << done_rank << "\n";
          progress_out.flush();
        }
      }
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  const uint64_t viol = min_violation.load();
  if (viol == UINT64_MAX) {
    cert.condition_holds = true;
    cert.checks_done = work_total;
    cert.checks_total = work_total;
  } else {
    cert.condition_holds = false;
    cert.violating_subset = unrank_combination(m, t, work_rank(viol));
    cert.checks_done = (opts.mode == CheckMode::sample ? viol : work_rank(viol)) + 1;
    cert.checks_total = work_total;
  }

  // line hypergraph metrics: nu equals alpha through the star bijection,
  // tau from the Gallai edge-cover identity
  cert.nu_line = alpha;
  cert.tau_line = g.order() - max_matching(g);
  cert.ryser_satisfied = cert.tau_line <= (r - 1) * cert.nu_line;
  cert.ryser_extremal = cert.tau_line == (r - 1) * cert.nu_line;
  cert.elapsed_ms = now_ms() - t_start;
  return cert;
}

WeakResult weak_lovasz(const Graph& g, int r, const WeakOptions& opts) {
  if (!g.regular(r))
    raise(Err::NotRegular, "graph is not " + std::to_string(r) + "-regular");
  const int alpha = max_independent_set(g).alpha;
  const uint64_t m = g.size();
  const int k_max = opts.k_max > 0 ? opts.k_max : r - 1;

  WeakResult res;
  bool exceeded = false;
  for (int k = opts.k_min; k <= k_max; ++k) {
    const int t = k * (r - 1);
    const uint64_t total = binomial(m, t);
    if (total > opts.budget_per_k) {
      exceeded = true;
      continue;
    }
    std::vector<int> combo(t);
    for (int i = 0; i < t; ++i) combo[i] = i;
    bool more = t <= int(m);
    while (more) {
      ++res.checks_done;
      VertexSet del = subset_endpoints(g, combo);
      if (!has_independent_set(g, alpha - k + 1, del)) {
        res.status = WeakResult::Status::holds;
        res.k_used = k;
        res.witness_edges = combo;
        return res;
      }
      more = next_combination(combo, int(m));
    }
    res.ks_completed.push_back(k);
  }
  res.status = exceeded ? WeakResult::Status::budget_exceeded : WeakResult::Status::refuted;
  return res;
}

// ---- certificate JSON --------------------------------------------------

std::string Certificate::to_json() const {
  nlohmann::json j;
  j["spec"] = spec;
  j["graph6"] = graph6;
  j["order"] = order;
  j["degree"] = degree;
  j["r"] = r;
  j["alpha"] = alpha;
  j["edge_colorable"] = edge_colorable;
  j["condition_holds"] = condition_holds;
  if (violating_subset) j["violating_subset"] = *violating_subset;
  j["checks_done"] = checks_done;
  j["checks_total"] = checks_total;
  j["nu_line"] = nu_line;
  j["tau_line"] = tau_line;
  j["ryser_satisfied"] = ryser_satisfied;
  j["ryser_extremal"] = ryser_extremal;
  j["elapsed_ms"] = elapsed_ms;
  j["tool_version"] = tool_version;
  return j.dump(2);
}

Certificate Certificate::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Certificate c;
  c.spec = j.at("spec");
  c.graph6 = j.at("graph6");
  c.order = j.at("order");
  c.degree = j.at("degree");
  c.r = j.at("r");
  c.alpha = j.at("alpha");
  c.edge_colorable = j.at("edge_colorable");
  c.condition_holds = j.at("condition_holds");
  if (j.contains("violating_subset"))
    c.violating_subset = j.at("violating_subset").get<std::vector<int>>();
  c.checks_done = j.at("checks_done");
  c.checks_total = j.at("checks_total");
  c.nu_line = j.at("nu_line");
  c.tau_line = j.at("tau_line");
  c.ryser_satisfied = j.at("ryser_satisfied");
  c.ryser_extremal = j.at("ryser_extremal");
  c.elapsed_ms = j.at("elapsed_ms");
  c.tool_version = j.at("tool_version");
  return c;
}

}  // namespace lhg
