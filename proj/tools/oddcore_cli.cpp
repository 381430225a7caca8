// Command-line front end: graph construction, analysis, bipartization
// solvers, decomposition, certificate verification, and verification suites.
//
// Exit codes: 0 success, 1 check failed, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "oddcore/bipartization.hpp"
#include "oddcore/core_finder.hpp"
#include "oddcore/decompose.hpp"
#include "oddcore/families.hpp"
#include "oddcore/graph.hpp"
#include "oddcore/graph_io.hpp"
#include "oddcore/json_io.hpp"
#include "oddcore/parity.hpp"
#include "oddcore/suites.hpp"

namespace {

using nlohmann::json;
using namespace oddcore;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

GraphFormat detect_format(const std::string& path,
                          const std::string& forced) {
  if (forced == "g6" || forced == "graph6") return GraphFormat::kGraph6;
  if (forced == "edges" || forced == "edge-list") return GraphFormat::kEdgeList;
  if (!forced.empty()) throw ParseError("unknown format: " + forced);
  if (path.size() >= 3 && path.substr(path.size() - 3) == ".g6")
    return GraphFormat::kGraph6;
  return GraphFormat::kEdgeList;
}

Graph load_graph(const std::string& path, const std::string& forced) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  GraphFormat fmt = detect_format(path, forced);
  if (fmt == GraphFormat::kGraph6) {
    // strip trailing newline(s)
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
      text.pop_back();
    return parse_graph6(text);
  }
  return parse_edge_list(text);
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    out << j.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"odd-cycle structure toolkit"};
  app.require_subcommand(1);

  // construct
  auto* c_construct = app.add_subcommand("construct", "build a named family");
  std::string family, out_fmt = "g6", out_path;
  int p_r = 0, p_n = 0, p_a = 0, p_b = 0, p_m = -1;
  double p_p = -1.0;
  std::uint64_t p_seed = 0;
  std::vector<int> p_sizes;
  std::string p_policy = "distinct";
  c_construct->add_option("--family", family,
                          "complete-bipartite|turan|t-star|c5-blowup|planted|random")
      ->required();
  c_construct->add_option("--r", p_r);
  c_construct->add_option("--n", p_n);
  c_construct->add_option("--a", p_a);
  c_construct->add_option("--b", p_b);
  c_construct->add_option("--m", p_m, "edge count for random");
  c_construct->add_option("--p", p_p, "edge probability for random");
  c_construct->add_option("--sizes", p_sizes)->delimiter(',');
  c_construct->add_option("--policy", p_policy, "distinct|chain");
  c_construct->add_option("--seed", p_seed);
  c_construct->add_option("--out", out_fmt, "g6|edges");
  c_construct->add_option("--out-file", out_path);

  // analyze
  auto* c_analyze = app.add_subcommand("analyze", "odd girth, blocks, degrees");
  std::string in_path, in_fmt, report_path;
  c_analyze->add_option("graph", in_path)->required();
  c_analyze->add_option("--format", in_fmt, "g6|edges");
  c_analyze->add_option("--report", report_path);

  // decompose
  auto* c_decomp = app.add_subcommand("decompose", "suspension decomposition");
  int d_k = 0, d_r = 0;
  std::string cert_path;
  c_decomp->add_option("graph", in_path)->required();
  c_decomp->add_option("--k", d_k)->required();
  c_decomp->add_option("--r", d_r)->required();
  c_decomp->add_option("--cert", cert_path);
  c_decomp->add_option("--format", in_fmt);

  // verify-cert
  auto* c_verify = app.add_subcommand("verify-cert", "check a certificate");
  std::string vc_cert;
  int vc_r = 0;
  c_verify->add_option("graph", in_path)->required();
  c_verify->add_option("cert", vc_cert)->required();
  c_verify->add_option("--r", vc_r)->required();
  c_verify->add_option("--format", in_fmt);
  c_verify->add_option("--report", report_path);

  // d2
  auto* c_d2 = app.add_subcommand("d2", "odd cycle transversal number");
  std::optional<int> d2_budget;
  c_d2->add_option("graph", in_path)->required();
  c_d2->add_option("--budget", d2_budget);
  c_d2->add_option("--format", in_fmt);
  c_d2->add_option("--report", report_path);

  // gamma2
  auto* c_g2 = app.add_subcommand("gamma2", "edge bipartization number");
  std::string g2_cert;
  c_g2->add_option("graph", in_path)->required();
  c_g2->add_option("--cert", g2_cert);
  c_g2->add_option("--format", in_fmt);
  c_g2->add_option("--report", report_path);

  // core
  auto* c_core = app.add_subcommand("core", "grow a strong core");
  int core_k = 0;
  std::vector<int> seed_cycle;
  c_core->add_option("graph", in_path)->required();
  c_core->add_option("--k", core_k)->required();
  c_core->add_option("--seed-cycle", seed_cycle)->delimiter(',');
  c_core->add_option("--format", in_fmt);
  c_core->add_option("--report", report_path);

  // check-free
  auto* c_free = app.add_subcommand("check-free", "cycle-of-length-L freeness");
  int free_len = 0;
  c_free->add_option("graph", in_path)->required();
  c_free->add_option("--length", free_len)->required();
  c_free->add_option("--format", in_fmt);
  c_free->add_option("--report", report_path);

  // verify-theorem
  auto* c_suite = app.add_subcommand("verify-theorem", "run a verification suite");
  std::string suite_name;
  c_suite->add_option("--suite", suite_name,
                      "formulas|solvers|decomposition|lemmas")->required();
  c_suite->add_option("--report", report_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*c_construct) {
      Graph g(0);
      if (family == "complete-bipartite") {
        g = make_complete_bipartite(p_a, p_b);
      } else if (family == "turan") {
        g = make_turan(p_r, p_n);
      } else if (family == "t-star") {
        g = make_tstar(p_r, p_n);
      } else if (family == "c5-blowup") {
        g = make_blowup_c5(p_sizes);
      } else if (family == "planted") {
        AnchorPolicy pol = p_policy == "chain"
                               ? AnchorPolicy::kChain
                               : AnchorPolicy::kDistinctBaseVertices;
        g = make_planted(p_a, p_b, p_sizes, pol, p_seed).graph;
      } else if (family == "random") {
        g = p_m >= 0 ? random_graph_gnm(p_n, p_m, p_seed)
                     : random_graph(p_n, p_p, p_seed);
      } else {
        std::cerr << "unknown family: " << family << "\n";
        return kUsage;
      }
      std::string text = out_fmt == "edges" ? format_edge_list(g)
                                            : format_graph6(g) + "\n";
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        out << text;
      }
      return kOk;
    }

    if (*c_analyze) {
      Graph g = load_graph(in_path, in_fmt);
      json j;
      j["n"] = g.vertex_count();
      j["m"] = g.edge_count();
      BipartitenessWitness w = is_bipartite(g);
      j["bipartite"] = w.odd_closed_walk.empty();
      auto cyc = shortest_odd_cycle(g);
      j["odd_girth"] = cyc ? json(cyc->length()) : json();
      if (cyc) j["shortest_odd_cycle"] = cyc->cycle;
      BlockCutTree bct = biconnected_components(g);
      j["block_count"] = bct.blocks.size();
      j["cut_vertices"] = bct.cut_vertices;
      int dmin = g.vertex_count() ? g.degree(0) : 0, dmax = 0;
      long long dsum = 0;
      for (int v = 0; v < g.vertex_count(); ++v) {
        dmin = std::min(dmin, g.degree(v));
        dmax = std::max(dmax, g.degree(v));
        dsum += g.degree(v);
      }
      j["degree"] = {{"min", dmin}, {"max", dmax}, {"sum", dsum}};
      emit(j, report_path);
      return kOk;
    }

    if (*c_decomp) {
      Graph g = load_graph(in_path, in_fmt);
      DecomposeResult res = decompose(g, d_k, d_r);
      if (auto* d = std::get_if<SuspensionDecomposition>(&res)) {
        emit(to_json(*d), cert_path);
        return kOk;
      }
      const auto& f = std::get<DiagnosticFailure>(res);
      emit(json{{"diagnostics", json::array({to_json(f)})}}, cert_path);
      return kCheckFailed;
    }

    if (*c_verify) {
      Graph g = load_graph(in_path, in_fmt);
      std::ifstream in(vc_cert);
      if (!in) throw ParseError("cannot open " + vc_cert);
      json cj = json::parse(in);
      SuspensionDecomposition d = decomposition_from_json(cj);
      VerificationOutcome v = verify_decomposition(g, d, vc_r);
      json j{{"accepted", v.accepted}, {"clause", v.clause},
             {"witness", v.witness}};
      emit(j, report_path);
      return v.accepted ? kOk : kCheckFailed;
    }

    if (*c_d2) {
      Graph g = load_graph(in_path, in_fmt);
      auto res = oct_exact(g, d2_budget);
      if (!res) {
        emit(json{{"value", nullptr}, {"note", "budget exceeded"}}, report_path);
        return kCheckFailed;
      }
      emit(to_json(*res), report_path);
      return kOk;
    }

    if (*c_g2) {
      Graph g = load_graph(in_path, in_fmt);
      SolverResult res = edge_bipartization(g);
      json j = to_json(res);
      if (!g2_cert.empty()) {
        std::ofstream out(g2_cert);
        out << j.dump(2) << "\n";
      }
      emit(j, report_path);
      return kOk;
    }

    if (*c_core) {
      Graph g = load_graph(in_path, in_fmt);
      std::vector<int> seed = seed_cycle;
      if (seed.empty()) {
        auto cyc = shortest_odd_cycle(g);
        if (!cyc) {
          emit(json{{"error", "graph is bipartite; no seed cycle"}},
               report_path);
          return kCheckFailed;
        }
        seed = cyc->cycle;
      }
      CoreCertificate cert = grow_strong_core(g, seed, core_k);
      emit(to_json(cert), report_path);
      return kOk;
    }

    if (*c_free) {
      Graph g = load_graph(in_path, in_fmt);
      auto cyc = has_cycle_of_length(g, free_len);
      json j{{"length", free_len}, {"free", !cyc.has_value()}};
      if (cyc) j["cycle"] = *cyc;
      emit(j, report_path);
      return cyc ? kCheckFailed : kOk;
    }

    if (*c_suite) {
      VerificationReport rep = run_suite(suite_name);
      emit(to_json(rep), report_path);
      return rep.all_passed() ? kOk : kCheckFailed;
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "argument error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}
