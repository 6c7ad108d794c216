#include "lhg/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lhg/errors.hpp"
#include "lhg/families.hpp"
#include "lhg/graph6.hpp"
#include "lhg/solvers.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace lhg {

namespace {

// file references inside group-based spec text ("@path", "table:path")
// resolve against the corpus directory; perm specs are left alone since '@'
// is a legal graph6 byte
std::string resolve_paths(std::string spec, const fs::path& dir) {
  if (spec.rfind("cgp:", 0) != 0 && spec.rfind("cayley:", 0) != 0) return spec;
  auto patch = [&](const std::string& token) {
    size_t pos = 0;
    while ((pos = spec.find(token, pos)) != std::string::npos) {
      size_t start = pos + token.size();
      if (start < spec.size() && spec[start] != '/') {
        spec.insert(start, dir.string() + "/");
      }
      pos = start;
    }
  };
  patch("@");
  patch("table:");
  return spec;
}

}  // namespace

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
  if (!fs::is_directory(dir)) raise(Err::CorpusEntryMissing, dir + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) raise(Err::CorpusEntryMissing, "no corpus entries in " + dir);

  std::vector<CorpusEntry> out;
  for (const auto& f : files) {
    std::ifstream in(f);
    json j;
    try {
      in >> j;
    } catch (const json::parse_error& e) {
      raise(Err::ParseError, f.string() + ": " + e.what());
    }
    CorpusEntry entry;
    entry.name = j.value("name", f.stem().string());
    entry.r = j.value("r", 3);
    entry.note = j.value("note", "");
    entry.skip_match = j.value("skip_match", false);
    if (j.contains("spec")) {
      entry.spec_text = resolve_paths(j["spec"], fs::path(dir));
    } else if (j.contains("graph6")) {
      entry.graph6 = j["graph6"];
    } else if (j.contains("graph6_file")) {
      fs::path p = fs::path(dir) / std::string(j["graph6_file"]);
      std::ifstream gf(p);
      if (!gf) raise(Err::CorpusEntryMissing, "graph file " + p.string());
      std::getline(gf, entry.graph6);
    } else {
      raise(Err::CorpusEntryMissing, f.string() + ": needs spec, graph6, or graph6_file");
    }
    if (j.contains("expected")) {
      const json& e = j["expected"];
      if (e.contains("order")) entry.expected.order = e["order"];
      if (e.contains("diameter")) entry.expected.diameter = e["diameter"];
      if (e.contains("girth")) entry.expected.girth = e["girth"];
      if (e.contains("hamiltonian")) entry.expected.hamiltonian = e["hamiltonian"];
    }
    out.push_back(std::move(entry));
  }
  return out;
}

Report table_report(const std::vector<CorpusEntry>& corpus, const ReportOptions& opts) {
  Report rep;
  for (const auto& entry : corpus) {
    ReportRow row;
    row.name = entry.name;
    row.counted = !entry.skip_match;
    Graph g;
    try {
      g = entry.spec_text.empty() ? decode_graph6(entry.graph6)
                                  : build_graph(parse_family_spec(entry.spec_text));
    } catch (const Error& e) {
      row.matched = false;
      row.detail = e.what();
      if (row.counted) rep.all_matched = false;
      rep.rows.push_back(std::move(row));
      continue;
    }
    auto met = metrics(g);
    row.order = g.order();
    row.diameter = met.diameter;
    row.girth = met.girth;
    row.edge_colorable = edge_colorable(g, entry.r).has_value();
    auto ham = hamiltonian(g, opts.hamiltonian_budget);
    row.hamiltonian = ham.status == HamiltonianResult::Status::cycle    ? "yes"
                      : ham.status == HamiltonianResult::Status::none   ? "no"
                                                                        : "unknown";
    std::ostringstream why;
    auto check = [&](const char* what, auto expected, auto actual) {
      if (!expected) return;
      bool ok = actual && *actual == *expected;
      if (!ok) {
        row.matched = false;
        why << what << " mismatch ";
      }
    };
    check("order", std::optional<int>(entry.expected.order), std::optional<int>(row.order));
    check("diameter", entry.expected.diameter, row.diameter);
    check("girth", entry.expected.girth, row.girth);
    if (entry.expected.hamiltonian && ham.status != HamiltonianResult::Status::unknown) {
      bool is_ham = ham.status == HamiltonianResult::Status::cycle;
      if (is_ham != *entry.expected.hamiltonian) {
        row.matched = false;
        why << "hamiltonian mismatch ";
      }
    }
    row.detail = why.str();
    if (!row.matched && row.counted) rep.all_matched = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::string render_report(const Report& report) {
  std::ostringstream os;
  os << "name                                      order  diam girth  ham      3/4-col  status\n";
  for (const auto& r : report.rows) {
    char line[200];
    snprintf(line, sizeof line, "%-40s %6d %5s %5s  %-8s %-8s %s%s\n", r.name.c_str(), r.order,
             r.diameter ? std::to_string(*r.diameter).c_str() : "inf",
             r.girth ? std::to_string(*r.girth).c_str() : "inf", r.hamiltonian.c_str(),
             r.edge_colorable ? "yes" : "no",
             r.matched ? "ok" : (r.counted ? "MISMATCH" : "unconfirmed"),
             r.detail.empty() ? "" : (" (" + r.detail + ")").c_str());
    os << line;
  }
  os << (report.all_matched ? "all expected values reproduced\n" : "MISMATCHES PRESENT\n");
  return os.str();
}

}  // namespace lhg
