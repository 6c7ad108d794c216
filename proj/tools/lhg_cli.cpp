// Command-line front end. Exit codes: 0 success/verified, 1 condition
// violated or not found, 2 error, 3 budget exhausted.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lhg/errors.hpp"
#include "lhg/families.hpp"
#include "lhg/graph6.hpp"
#include "lhg/hypergraph.hpp"
#include "lhg/oracle.hpp"
#include "lhg/report.hpp"
#include "lhg/search.hpp"
#include "lhg/solvers.hpp"
#include "lhg/verifier.hpp"
#include "lhg/version.hpp"

using namespace lhg;
using nlohmann::json;

namespace {

// family specs always contain ':', which is not a graph6 byte
Graph load_input(const std::string& text, std::string* spec_out = nullptr) {
  if (text.rfind("g6:", 0) == 0) {
    if (spec_out) *spec_out = text;
    return decode_graph6(text.substr(3));
  }
  if (text.find(':') != std::string::npos) {
    if (spec_out) *spec_out = text;
    return build_graph(parse_family_spec(text));
  }
  if (spec_out) *spec_out = "g6:" + text;
  return decode_graph6(text);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) raise(Err::IoError, "cannot write " + out_path);
    out << text << "\n";
  }
}

int parse_mode(const std::string& mode, VerifyOptions& vo) {
  if (mode == "full") {
    vo.mode = CheckMode::full;
  } else if (mode.rfind("sample:", 0) == 0) {
    vo.mode = CheckMode::sample;
    vo.sample_count = std::stoull(mode.substr(7));
  } else if (mode.rfind("resume:", 0) == 0) {
    vo.mode = CheckMode::resume;
    vo.progress_path = mode.substr(7);
  } else {
    std::cerr << "bad --mode: " << mode << " (full | sample:N | resume:FILE)\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"line hypergraph counterexample toolkit"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // construct
  auto* cmd_construct = app.add_subcommand("construct", "emit a family graph as graph6");
  std::string c_spec, c_out;
  cmd_construct->add_option("spec", c_spec, "family spec, e.g. gp:11,2")->required();
  cmd_construct->add_option("--out", c_out, "output file (default stdout)");

  // props
  auto* cmd_props = app.add_subcommand("props", "print a metrics record");
  std::string p_input;
  cmd_props->add_option("input", p_input, "family spec or graph6")->required();

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "independence-condition certificate");
  std::string v_input, v_mode = "full", v_out;
  int v_r = 3, v_workers = 1;
  uint64_t v_seed = 0;
  cmd_verify->add_option("input", v_input)->required();
  cmd_verify->add_option("--r", v_r, "uniformity (graph regularity)")->required();
  cmd_verify->add_option("--mode", v_mode, "full | sample:N | resume:FILE");
  cmd_verify->add_option("--workers", v_workers);
  cmd_verify->add_option("--seed", v_seed, "sample mode seed");
  cmd_verify->add_option("--out", v_out, "certificate file (default stdout)");

  // weak
  auto* cmd_weak = app.add_subcommand("weak", "weakened-conjecture check");
  std::string w_input;
  int w_r = 3, w_k = 0;
  uint64_t w_budget = 10'000'000;
  cmd_weak->add_option("input", w_input)->required();
  cmd_weak->add_option("--r", w_r)->required();
  cmd_weak->add_option("--k", w_k, "restrict to a single k");
  cmd_weak->add_option("--budget", w_budget, "max subsets per k");

  // ryser
  auto* cmd_ryser = app.add_subcommand("ryser", "nu/tau/bound report");
  std::string r_input;
  int r_r = 3;
  cmd_ryser->add_option("input", r_input)->required();
  cmd_ryser->add_option("--r", r_r)->required();

  // oracle
  auto* cmd_oracle = app.add_subcommand("oracle", "constructive independent-set trace");
  int o_k = 0;
  std::string o_edges;
  cmd_oracle->add_option("--k", o_k)->required();
  cmd_oracle->add_option("--edges", o_edges, "two edges as u-v,w-x (vertex indices)")
      ->required();

  // search
  auto* cmd_search = app.add_subcommand("search", "cgp parameter sweep");
  std::string s_config;
  cmd_search->add_option("--config", s_config, "key = value config file")->required();

  // report
  auto* cmd_report = app.add_subcommand("report", "corpus reproduction table");
  std::string t_corpus;
  uint64_t t_budget = 50'000'000;
  cmd_report->add_option("--corpus", t_corpus, "corpus directory")->required();
  cmd_report->add_option("--budget", t_budget, "hamiltonian node budget");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_construct) {
      emit(encode_graph6(build_graph(parse_family_spec(c_spec))), c_out);
      return 0;
    }

    if (*cmd_props) {
      Graph g = load_input(p_input);
      auto m = metrics(g);
      json j;
      j["order"] = g.order();
      j["size"] = g.size();
      j["degree_min"] = m.degree_min;
      j["degree_max"] = m.degree_max;
      j["connected"] = m.connected;
      j["girth"] = m.girth ? json(*m.girth) : json(nullptr);
      j["diameter"] = m.diameter ? json(*m.diameter) : json(nullptr);
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*cmd_verify) {
      VerifyOptions vo;
      if (int rc = parse_mode(v_mode, vo)) return rc;
      vo.workers = v_workers;
      vo.seed = v_seed;
      Graph g = load_input(v_input, &vo.spec_text);
      Certificate cert = lovasz_condition(g, v_r, vo);
      emit(cert.to_json(), v_out);
      return cert.condition_holds ? 0 : 1;
    }

    if (*cmd_weak) {
      Graph g = load_input(w_input);
      WeakOptions wo;
      wo.budget_per_k = w_budget;
      if (w_k > 0) wo.k_min = wo.k_max = w_k;
      WeakResult res = weak_lovasz(g, w_r, wo);
      json j;
      j["holds"] = res.status == WeakResult::Status::holds;
      j["checks_done"] = res.checks_done;
      j["ks_completed"] = res.ks_completed;
      if (res.status == WeakResult::Status::holds) {
        j["k_used"] = res.k_used;
        j["witness"] = res.witness_edges;
      }
      if (res.status == WeakResult::Status::budget_exceeded) j["budget_exceeded"] = true;
      std::cout << j.dump(2) << "\n";
      if (res.status == WeakResult::Status::holds) return 0;
      return res.status == WeakResult::Status::budget_exceeded ? 3 : 1;
    }

    if (*cmd_ryser) {
      Graph g = load_input(r_input);
      RyserReport rep = ryser_report(line_hypergraph(g), r_r);
      json j;
      j["nu"] = rep.nu;
      j["tau"] = rep.tau;
      j["bound"] = rep.bound;
      j["satisfied"] = rep.satisfied;
      j["extremal"] = rep.extremal;
      std::cout << j.dump(2) << "\n";
      return rep.satisfied ? 0 : 1;
    }

    if (*cmd_oracle) {
      auto comma = o_edges.find(',');
      if (comma == std::string::npos) {
        std::cerr << "--edges wants u-v,w-x\n";
        return 2;
      }
      auto parse_edge = [](const std::string& s) -> EdgePair {
        auto dash = s.find('-');
        if (dash == std::string::npos) raise(Err::ParseError, "edge wants u-v, got " + s);
        return {std::stoi(s.substr(0, dash)), std::stoi(s.substr(dash + 1))};
      };
      EdgePair e1 = parse_edge(o_edges.substr(0, comma));
      EdgePair e2 = parse_edge(o_edges.substr(comma + 1));
      IndependenceOracle oracle;
      OracleTrace t = oracle.run(o_k, e1, e2);
      json j;
      j["k"] = t.k;
      j["size"] = t.independent_set.count();
      j["independent_set"] = t.independent_set.to_vector();
      j["recursion_depth"] = t.recursion_depth;
      if (t.i0) j["i0"] = *t.i0;
      if (t.i1) j["i1"] = *t.i1;
      j["verified"] = true;  // run() throws otherwise
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*cmd_search) {
      SearchConfig cfg = parse_search_config(s_config);
      SearchSummary sum = run_search(cfg);
      json j;
      j["total"] = sum.total;
      j["duplicates"] = sum.duplicates;
      j["filtered"] = sum.filtered;
      j["violated"] = sum.violated;
      j["counterexamples"] = sum.counterexamples;
      j["errors"] = sum.errors;
      j["resumed"] = sum.resumed;
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*cmd_report) {
      ReportOptions ro;
      ro.hamiltonian_budget = t_budget;
      Report rep = table_report(load_corpus(t_corpus), ro);
      std::cout << render_report(rep);
      return rep.all_matched ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == Err::BudgetExceeded ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
