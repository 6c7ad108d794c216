#include "lhg/search.hpp"

#include <condition_variable>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "lhg/errors.hpp"
#include "lhg/isomorphism.hpp"
#include "lhg/verifier.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace lhg {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  size_t b = s.find_last_not_of(" \t\r\n");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  raise(Err::ParseError, "bad boolean '" + v + "'");
}

json config_json(const SearchConfig& cfg) {
  // semantic fields only: workers and paths do not affect results
  json j;
  j["m"] = cfg.m;
  j["group"] = cfg.group_desc;
  j["r"] = cfg.r;
  j["connected"] = cfg.filters.connected;
  j["min_girth"] = cfg.filters.min_girth;
  j["degree"] = cfg.filters.degree ? cfg.filters.degree : cfg.r;
  j["dedupe"] = cfg.dedupe;
  j["seed"] = cfg.seed;
  return j;
}

}  // namespace

SearchConfig parse_search_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Err::IoError, "cannot open " + path);
  SearchConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      raise(Err::ParseError, path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (key == "m") cfg.m = std::stoi(val);
    else if (key == "group") cfg.group_desc = val;
    else if (key == "r") cfg.r = std::stoi(val);
    else if (key == "connected") cfg.filters.connected = parse_bool(val);
    else if (key == "min_girth") cfg.filters.min_girth = std::stoi(val);
    else if (key == "degree") cfg.filters.degree = std::stoi(val);
    else if (key == "dedupe") cfg.dedupe = parse_bool(val);
    else if (key == "workers") cfg.workers = std::stoi(val);
    else if (key == "seed") cfg.seed = std::stoull(val);
    else if (key == "out") cfg.out_path = val;
    else if (key == "resume") cfg.resume_path = val;
    else raise(Err::ParseError, path + ": unknown key '" + key + "'");
  }
  return cfg;
}

void for_each_spec(const SearchConfig& cfg, const std::function<void(const FamilySpec&)>& fn) {
  GroupRef ref = parse_group_descriptor(cfg.group_desc);
  const FiniteGroup& G = *ref.group;
  const int m = cfg.m;
  if (m < 2) raise(Err::DegenerateParameter, "search requires m >= 2");

  std::vector<int> kreps;
  for (int x = 0; x < G.order(); ++x)
    if (x != G.identity() && x != G.inv(x) && x <= G.inv(x)) kreps.push_back(x);
  const bool abelian = G.abelian();
  std::vector<int> cvals;
  for (int x = 0; x < G.order(); ++x) cvals.push_back(x);

  std::vector<int> ks(m, 0), cs(m, 0);  // odometer positions
  const int c_slots = abelian ? m - 1 : m;
  if (kreps.empty()) return;

  auto emit = [&]() {
    CgpSpec s;
    s.m = m;
    s.group = ref.group;
    s.group_desc = ref.descriptor;
    for (int i = 0; i < m; ++i) s.ks.push_back(kreps[ks[i]]);
    for (int i = 0; i < m; ++i)
      s.cs.push_back(i < c_slots ? cvals[cs[i]] : G.identity());
    fn(FamilySpec(std::move(s)));
  };

  for (;;) {
    emit();
    // advance odometer: c values innermost
    int i = c_slots - 1;
    while (i >= 0 && ++cs[i] == int(cvals.size())) cs[i--] = 0;
    if (i >= 0) continue;
    i = m - 1;
    while (i >= 0 && ++ks[i] == int(kreps.size())) ks[i--] = 0;
    if (i < 0) break;
  }
}

std::vector<FamilySpec> enumerate_specs(const SearchConfig& cfg) {
  std::vector<FamilySpec> out;
  for_each_spec(cfg, [&](const FamilySpec& s) { out.push_back(s); });
  return out;
}

namespace {

struct RecordSink {
  std::ofstream out;
  std::mutex mu;
  std::condition_variable cv;
  std::map<uint64_t, std::string> ready;
  uint64_t next = 0;
  bool closed = false;

  void push(uint64_t index, std::string line) {
    std::lock_guard lk(mu);
    ready.emplace(index, std::move(line));
    cv.notify_all();
  }
  void close() {
    std::lock_guard lk(mu);
    closed = true;
    cv.notify_all();
  }
  void drain_loop() {
    std::unique_lock lk(mu);
    for (;;) {
      cv.wait(lk, [&] { return closed || ready.count(next); });
      while (ready.count(next)) {
        out << ready[next] << "\n";
        out.flush();
        ready.erase(next);
        ++next;
      }
      if (closed && ready.empty()) return;
    }
  }
};

struct Bucket {
  uint64_t index;
  Graph graph;
};

}  // namespace

SearchSummary run_search(const SearchConfig& cfg) {
  if (cfg.out_path.empty()) raise(Err::IoError, "search needs an output path");
  const int want_degree = cfg.filters.degree ? cfg.filters.degree : cfg.r;
  const json cfgj = config_json(cfg);

  // ---- replay a previous results file -------------------------------
  uint64_t resume_from = 0;
  std::map<std::string, std::vector<Bucket>> buckets;
  SearchSummary summary;
  std::vector<std::string> replayed_specs;
  if (!cfg.resume_path.empty()) {
    if (cfg.resume_path != cfg.out_path)
      raise(Err::ResumeMismatch, "resume path must equal the output path");
    std::ifstream in(cfg.resume_path);
    if (in) {
      std::string line;
      if (std::getline(in, line)) {
        json head = json::parse(line);
        if (!head.contains("config") || head["config"] != cfgj)
          raise(Err::ResumeMismatch, "config in " + cfg.resume_path + " differs");
        uint64_t expect = 0;
        while (std::getline(in, line)) {
          if (trim(line).empty()) continue;
          json rec = json::parse(line);
          if (rec.at("index") != expect)
            raise(Err::ResumeMismatch, "records are not contiguous at " + std::to_string(expect));
          std::string status = rec.at("status");
          std::string spec_text = rec.at("spec");
          replayed_specs.push_back(spec_text);
          if (status == "violated" || status == "counterexample") {
            Graph g = build_graph(parse_family_spec(spec_text));
            buckets[fingerprint(g).to_string()].push_back({expect, std::move(g)});
          }
          if (status == "duplicate") ++summary.duplicates;
          else if (status == "filtered") ++summary.filtered;
          else if (status == "violated") ++summary.violated;
          else if (status == "counterexample") ++summary.counterexamples;
          else if (status == "error") ++summary.errors;
          ++expect;
        }
        resume_from = expect;
        summary.resumed = expect;
      }
    }
  }

  RecordSink sink;
  fs::path outp(cfg.out_path);
  if (outp.has_parent_path()) fs::create_directories(outp.parent_path());
  fs::path certdir = (outp.has_parent_path() ? outp.parent_path() : fs::path(".")) / "certs";
  sink.out.open(cfg.out_path, resume_from ? std::ios::app : std::ios::trunc);
  if (!sink.out) raise(Err::IoError, "cannot write " + cfg.out_path);
  if (resume_from == 0) {
    json head;
    head["config"] = cfgj;
    sink.out << head.dump() << "\n";
    sink.out.flush();
  }

  // ---- verification worker pool --------------------------------------
  struct Job {
    uint64_t index;
    std::string spec_text;
    Graph graph;
    std::string fp;
  };
  std::deque<Job> jobs;
  std::mutex jobs_mu;
  std::condition_variable jobs_cv;
  bool jobs_done = false;

  auto verify_worker = [&]() {
    for (;;) {
      Job job;
      {
        std::unique_lock lk(jobs_mu);
        jobs_cv.wait(lk, [&] { return jobs_done || !jobs.empty(); });
        if (jobs.empty()) {
          if (jobs_done) return;
          continue;
        }
        job = std::move(jobs.front());
        jobs.pop_front();
      }
      VerifyOptions vo;
      vo.spec_text = job.spec_text;
      Certificate cert = lovasz_condition(job.graph, cfg.r, vo);
      fs::create_directories(certdir);
      fs::path certfile = certdir / (std::to_string(job.index) + ".json");
      {
        std::ofstream cf(certfile);
        cf << cert.to_json() << "\n";
      }
      json rec;
      rec["index"] = job.index;
      rec["spec"] = job.spec_text;
      rec["fingerprint"] = job.fp;
      bool counter = cert.condition_holds && cert.edge_colorable;
      rec["status"] = counter ? "counterexample" : "violated";
      rec["alpha"] = cert.alpha;
      rec["edge_colorable"] = cert.edge_colorable;
      rec["condition_holds"] = cert.condition_holds;
      if (cert.violating_subset) rec["violating_subset"] = *cert.violating_subset;
      rec["cert"] = "certs/" + std::to_string(job.index) + ".json";
      {
        std::lock_guard lk(jobs_mu);
        if (counter) ++summary.counterexamples;
        else ++summary.violated;
      }
      sink.push(job.index, rec.dump());
    }
  };

  sink.next = resume_from;
  std::thread writer([&] { sink.drain_loop(); });
  std::vector<std::thread> pool;
  for (int w = 0; w < std::max(1, cfg.workers); ++w) pool.emplace_back(verify_worker);

  // ---- enumerate, filter, dedupe --------------------------------------
  uint64_t index = 0;
  for_each_spec(cfg, [&](const FamilySpec& spec) {
    const uint64_t my = index++;
    std::string spec_text = to_string(spec);
    ++summary.total;
    if (my < resume_from) {
      if (replayed_specs[my] != spec_text)
        raise(Err::ResumeMismatch, "spec at index " + std::to_string(my) + " differs");
      return;
    }
    json rec;
    rec["index"] = my;
    rec["spec"] = spec_text;
    Graph g;
    try {
      g = build_graph(spec);
    } catch (const Error& e) {
      rec["status"] = "error";
      rec["reason"] = e.what();
      ++summary.errors;
      sink.push(my, rec.dump());
      return;
    }
    auto met = metrics(g);
    std::string why;
    if (g.min_degree() != want_degree || g.max_degree() != want_degree)
      why = "degree != " + std::to_string(want_degree);
    else if (cfg.filters.connected && !met.connected)
      why = "disconnected";
    else if (cfg.filters.min_girth > 0 && (!met.girth || *met.girth < cfg.filters.min_girth))
      why = "girth below " + std::to_string(cfg.filters.min_girth);
    if (!why.empty()) {
      rec["status"] = "filtered";
      rec["reason"] = why;
      ++summary.filtered;
      sink.push(my, rec.dump());
      return;
    }
    std::string fp = fingerprint(g).to_string();
    rec["fingerprint"] = fp;
    if (cfg.dedupe) {
      for (const auto& b : buckets[fp]) {
        auto iso = find_isomorphism(g, b.graph);
        if (iso) {
          rec["status"] = "duplicate";
          rec["of"] = b.index;
          rec["witness"] = *iso;
          ++summary.duplicates;
          sink.push(my, rec.dump());
          return;
        }
      }
      buckets[fp].push_back({my, g});
    }
    {
      std::lock_guard lk(jobs_mu);
      jobs.push_back({my, std::move(spec_text), std::move(g), std::move(fp)});
    }
    jobs_cv.notify_one();
  });

  {
    std::lock_guard lk(jobs_mu);
    jobs_done = true;
  }
  jobs_cv.notify_all();
  for (auto& th : pool) th.join();
  sink.close();
  writer.join();
  return summary;
}

}  // namespace lhg
