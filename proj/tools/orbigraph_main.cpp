// Command-line front end: builds commuting graphs of automorphism-orbit
// actions on finite groups, analyzes them, and runs the claim-verification
// suite over a corpus.  Data goes to stdout (or --out), diagnostics to
// stderr.  Exit codes: 0 ok, 1 verdict failures, 2 usage/parse errors,
// 3 inconclusive verdicts only.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "orbigraph/orbigraph.hpp"

namespace og = orbigraph;

namespace {

struct GlobalOpts {
  std::string group_arg;
  std::string action_arg = "trivial";
  int max_order = 100000;
  int aut_cap = 512;
  int max_aut = 50000;
  long long budget = 1000000;
  bool oracle = false;
  int jobs = 1;
  std::uint64_t seed = 0;

  og::GroupOptions group_options() const {
    og::GroupOptions o;
    o.max_order = max_order;
    o.seed = seed;
    return o;
  }
  og::ActionOptions action_options() const {
    og::ActionOptions o;
    o.aut_cap = aut_cap;
    o.max_aut = max_aut;
    return o;
  }
  og::CorpusOptions corpus_options() const {
    return og::CorpusOptions{group_options(), action_options()};
  }
};

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw og::Error("cannot write to " + out_path);
  out << text;
}

int run_graph(const GlobalOpts& g, const std::string& format, const std::string& out_path) {
  auto grp = og::resolve_group_arg(g.group_arg, g.group_options());
  auto act = og::resolve_action_arg(g.action_arg, grp, g.action_options());
  og::OrbitGraph graph = og::commuting_graph(*grp, act, g.oracle);
  if (format == "dot")
    write_output(og::graph_to_dot(graph), out_path);
  else
    write_output(og::graph_to_json(graph).dump(2), out_path);
  return 0;
}

int run_analyze(const GlobalOpts& g, const std::string& out_path) {
  auto grp = og::resolve_group_arg(g.group_arg, g.group_options());
  auto act = og::resolve_action_arg(g.action_arg, grp, g.action_options());
  og::OrbitGraph graph = og::commuting_graph(*grp, act, g.oracle);
  og::SearchBudget budget{g.budget};
  og::StructureReport sr = og::structure_report(*grp, budget);
  og::Json j{{"group", grp->name()},
             {"order", grp->order()},
             {"action", act.name()},
             {"actionSize", act.size()},
             {"graph", og::graph_to_json(graph)},
             {"structure", og::structure_to_json(sr)}};
  write_output(j.dump(2), out_path);
  return 0;
}

int run_gk(const GlobalOpts& g, const std::string& out_path) {
  auto grp = og::resolve_group_arg(g.group_arg, g.group_options());
  auto act = og::resolve_action_arg(g.action_arg, grp, g.action_options());
  og::SimpleGraph gk = og::gk_graph(*grp);
  og::OrbitGraph graph = og::commuting_graph(*grp, act, g.oracle);
  og::Json edges = og::Json::array();
  for (auto [i, j] : gk.edge_list()) edges.push_back({gk.labels[i], gk.labels[j]});
  og::Json j{{"group", grp->name()},
             {"primes", gk.labels},
             {"edges", edges},
             {"quotientMatchesPrimeGraph", og::gk_via_quotient_check(*grp, graph)}};
  write_output(j.dump(2), out_path);
  return 0;
}

int run_catalog(const std::string& out_path) {
  og::Json j = og::Json::array();
  for (const auto& e : og::catalog())
    j.push_back(og::Json{{"name", e.name}, {"order", e.order}, {"degree", e.degree}});
  write_output(j.dump(2), out_path);
  return 0;
}

int run_verify(const GlobalOpts& g, const std::string& corpus_arg,
               const std::string& claims_csv, const std::string& out_path) {
  std::vector<og::VerifyCase> corpus;
  if (corpus_arg == "default")
    corpus = og::default_corpus(g.corpus_options());
  else
    corpus = og::load_corpus_file(corpus_arg, g.corpus_options());

  og::VerifyOptions opts;
  opts.budget.nodes = g.budget;
  opts.brute_force_edges = g.oracle;
  opts.jobs = g.jobs;
  if (!claims_csv.empty()) {
    std::string cur;
    for (char c : claims_csv + ",") {
      if (c == ',') {
        if (!cur.empty()) opts.claims.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    for (const auto& c : opts.claims) {
      const auto& ids = og::all_claim_ids();
      if (std::find(ids.begin(), ids.end(), c) == ids.end())
        throw og::ParseError("unknown claim id: " + c);
    }
  }

  og::StructureCache cache(opts.budget);
  og::SuiteResult suite = og::run_suite_detailed(corpus, opts, cache);
  auto summary = suite.summary();

  // human-readable table on stderr
  for (const auto& v : suite.flat_verdicts())
    std::cerr << v.case_id << "  " << v.claim_id << "  " << og::to_string(v.status) << "\n";
  std::cerr << "passed " << summary["passed"] << "  failed " << summary["failed"]
            << "  inconclusive " << summary["inconclusive"] << "  not-applicable "
            << summary["notApplicable"] << "\n";

  write_output(og::report_to_json(suite).dump(2), out_path);
  if (summary["failed"] > 0) return 1;
  if (summary["inconclusive"] > 0) return 3;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"commuting graphs of automorphism orbits on finite groups"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--group", g.group_arg, "group spec: catalog:NAME or a JSON file");
  app.add_option("--action", g.action_arg,
                 "action spec: trivial|inner|full-aut|aut-subgroup:N or a JSON file");
  app.add_option("--max-order", g.max_order, "closure cap for generated groups");
  app.add_option("--aut-cap", g.aut_cap, "max group order for full Aut computation");
  app.add_option("--max-aut", g.max_aut, "max number of automorphisms to materialize");
  app.add_option("--budget", g.budget, "node budget for subgroup searches");
  app.add_flag("--oracle", g.oracle, "force the brute-force element-pair edge oracle");
  app.add_option("--jobs", g.jobs, "parallel case workers for verify");
  app.add_option("--seed", g.seed, "seed for sampled associativity checks");

  std::string format = "json", out_path, corpus_arg = "default", claims_csv;

  CLI::App* c_graph = app.add_subcommand("graph", "build Gamma(G,A) and print it");
  c_graph->add_option("--format", format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  c_graph->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* c_analyze = app.add_subcommand("analyze", "graph analytics plus structure report");
  c_analyze->add_option("--out", out_path, "output path");

  CLI::App* c_gk = app.add_subcommand("gk", "prime graph and quotient-isomorphism check");
  c_gk->add_option("--out", out_path, "output path");

  CLI::App* c_verify = app.add_subcommand("verify", "run the claim suite over a corpus");
  c_verify->add_option("--corpus", corpus_arg, "default or a corpus JSON file");
  c_verify->add_option("--claims", claims_csv, "comma-separated claim ids (default all)");
  c_verify->add_option("--out", out_path, "report path (default stdout)");

  CLI::App* c_catalog = app.add_subcommand("catalog", "list built-in groups");
  c_catalog->add_option("--out", out_path, "output path");

  CLI::App* c_export = app.add_subcommand("export", "write Gamma(G,A) to a file");
  c_export->add_option("--format", format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  c_export->add_option("--out", out_path, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_graph->parsed() || c_export->parsed()) {
      if (g.group_arg.empty()) throw og::ParseError("--group is required");
      return run_graph(g, format, out_path);
    }
    if (c_analyze->parsed()) {
      if (g.group_arg.empty()) throw og::ParseError("--group is required");
      return run_analyze(g, out_path);
    }
    if (c_gk->parsed()) {
      if (g.group_arg.empty()) throw og::ParseError("--group is required");
      return run_gk(g, out_path);
    }
    if (c_catalog->parsed()) return run_catalog(out_path);
    if (c_verify->parsed()) return run_verify(g, corpus_arg, claims_csv, out_path);
  } catch (const og::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const og::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
