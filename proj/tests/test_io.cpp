#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sys/wait.h>

#include "oracles.hpp"
#include "orbigraph/orbigraph.hpp"

using namespace orbigraph;

namespace {
GroupPtr cat(const std::string& name) { return catalog_group(name); }
}

TEST_CASE("group spec parsing") {
  SUBCASE("permutation spec") {
    Json j = Json::parse(R"({"kind":"permutation","degree":3,
                             "generators":[[[0,1,2]],[[0,1]]]})");
    GroupPtr g = build_group(parse_group_spec(j));
    CHECK(g->order() == 6);
  }

  SUBCASE("table spec") {
    Json j = Json::parse(R"({"kind":"table","order":2,"table":[[0,1],[1,0]]})");
    CHECK(build_group(parse_group_spec(j))->order() == 2);
  }

  SUBCASE("catalog spec and alias") {
    Json j = Json::parse(R"js({"kind":"catalog","name":"PSL(2,5)"})js");
    GroupPtr g = build_group(parse_group_spec(j));
    CHECK(g->order() == 60);
    CHECK(g->name() == "A5");
  }

  SUBCASE("malformed specs raise ParseError") {
    CHECK_THROWS_AS(parse_group_spec(Json::parse(R"({"kind":"permutation","degree":3})")),
                    ParseError);
    CHECK_THROWS_AS(parse_group_spec(Json::parse(R"({"kind":"nope"})")), ParseError);
    Json bad_cycle = Json::parse(R"({"kind":"permutation","degree":3,
                                     "generators":[[[0,7]]]})");
    CHECK_THROWS_AS(build_group(parse_group_spec(bad_cycle)), ParseError);
    CHECK_THROWS_AS(resolve_group_arg("catalog:NoSuchGroup"), ParseError);
    CHECK_THROWS_AS(resolve_group_arg("/nonexistent/file.json"), ParseError);
  }
}

TEST_CASE("action spec parsing") {
  auto q8 = cat("Q8");
  SUBCASE("aut-subgroup picks the first subgroup of the given order") {
    ActionGroup a = resolve_action_arg("aut-subgroup:3", q8);
    CHECK(a.size() == 3);
    auto orbs = orbits(a);
    CHECK(orbs.size() == 3);
  }
  SUBCASE("named kinds") {
    CHECK(resolve_action_arg("trivial", q8).size() == 1);
    CHECK(resolve_action_arg("inner", q8).size() == 4);
    CHECK(resolve_action_arg("full-aut", q8).size() == 24);
  }
  SUBCASE("generator maps") {
    ActionGroup rot = aut_subgroup_action(q8, 3);
    Json j;
    j["kind"] = "generators";
    j["maps"] = Json::array();
    j["maps"].push_back(rot.at(1).map);
    ActionGroup a = build_action(parse_action_spec(j), q8);
    CHECK(a.size() == 3);
  }
  SUBCASE("bad action args") {
    CHECK_THROWS_AS(resolve_action_arg("aut-subgroup:x", q8), ParseError);
    CHECK_THROWS_AS(resolve_action_arg("/nonexistent/action.json", q8), ParseError);
    CHECK_THROWS_AS(parse_action_spec(Json::parse(R"({"kind":"weird"})")), ParseError);
  }
}

TEST_CASE("catalog entries") {
  CHECK(cat("Q8")->order() == 8);
  CHECK(cat("A5")->order() == 60);
  CHECK(cat("S5")->order() == 120);
  CHECK(cat("PSL(2,7)")->order() == 168);
  CHECK(cat("AGL(1,11)")->order() == 110);
  CHECK(cat("AGL(1,13)")->order() == 156);
  CHECK(cat("elemab-81")->order() == 81);
  CHECK(cat("D8xC3")->order() == 24);
  CHECK(cat("Q8xC3")->order() == 24);

  SUBCASE("extraspecial-27-exp3 has order 27 and exponent 3") {
    auto g = cat("extraspecial-27-exp3");
    CHECK(g->order() == 27);
    for (Elem x = 1; x < 27; ++x) CHECK(g->element_order(x) == 3);
    CHECK(center(*g).order() == 3);
    CHECK_FALSE(is_abelian_subset(*g, whole_group(*g).members));
  }

  SUBCASE("Q16 is generalized quaternion: a unique involution") {
    auto g = cat("Q16");
    CHECK(g->order() == 16);
    int involutions = 0, max_order = 0;
    for (Elem x = 1; x < 16; ++x) {
      if (g->element_order(x) == 2) ++involutions;
      max_order = std::max(max_order, g->element_order(x));
    }
    CHECK(involutions == 1);
    CHECK(max_order == 8);
  }

  SUBCASE("every catalog entry builds with the declared order") {
    for (const auto& e : catalog()) {
      auto g = catalog_group(e.name);
      CHECK(g->order() == e.order);
      CHECK(g->name() == e.name);
    }
  }
}

TEST_CASE("graph export") {
  auto q8 = cat("Q8");
  OrbitGraph k3 = commuting_graph(*q8, aut_subgroup_action(q8, 3));

  SUBCASE("DOT: three nodes, three edges, stable names") {
    std::string dot = graph_to_dot(k3);
    CHECK(dot.find("graph") == 0);
    int nodes = 0, edges = 0;
    for (size_t pos = 0; (pos = dot.find("[label=", pos)) != std::string::npos; ++pos) ++nodes;
    for (size_t pos = 0; (pos = dot.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
    CHECK(nodes == 3);
    CHECK(edges == 3);
  }

  SUBCASE("edgeless graphs have no edge lines") {
    auto a5 = cat("A5");
    OrbitGraph gr = commuting_graph(*a5, full_automorphism_group(a5));
    std::string dot = graph_to_dot(gr);
    CHECK(dot.find(" -- ") == std::string::npos);
  }

  SUBCASE("JSON round trip preserves vertices and adjacency") {
    std::string text = graph_to_json(k3).dump();
    GraphDoc imported = import_graph_json(text);
    CHECK(imported == graph_doc(k3));
  }

  SUBCASE("JSON schema fields") {
    Json j = graph_to_json(k3);
    for (const char* key : {"group", "action", "vertices", "edges", "analytics"})
      CHECK(j.contains(key));
    CHECK(j["vertices"].size() == 3);
    for (const Json& v : j["vertices"])
      for (const char* key : {"rep", "size", "elementOrder"}) CHECK(v.contains(key));
    // edges sorted with i < j
    int prev_i = -1, prev_j = -1;
    for (const Json& e : j["edges"]) {
      int i = e[0], jj = e[1];
      CHECK(i < jj);
      CHECK(std::make_pair(i, jj) > std::make_pair(prev_i, prev_j));
      prev_i = i;
      prev_j = jj;
    }
  }
}

TEST_CASE("report JSON") {
  auto s3 = cat("S3");
  auto q8 = cat("Q8");
  std::vector<VerifyCase> corpus{make_case(s3, trivial_action(s3)),
                                 make_case(q8, aut_subgroup_action(q8, 3))};
  VerifyOptions opts;
  StructureCache cache;
  SuiteResult suite = run_suite_detailed(corpus, opts, cache);
  Json report = report_to_json(suite);

  SUBCASE("schema") {
    CHECK(report["version"] == "1");
    REQUIRE(report["cases"].size() == 2);
    for (const Json& c : report["cases"]) {
      for (const char* key : {"group", "action", "graph", "structure", "verdicts"})
        CHECK(c.contains(key));
    }
    for (const char* key : {"passed", "failed", "inconclusive", "notApplicable"})
      CHECK(report["summary"].contains(key));
    CHECK(report["summary"]["failed"] == 0);
  }

  SUBCASE("aut-subgroup actions record their generators") {
    bool found = false;
    for (const Json& c : report["cases"])
      if (c["action"]["name"] == "aut-subgroup:3") {
        found = true;
        CHECK(c["action"].contains("generators"));
      }
    CHECK(found);
  }

  SUBCASE("byte-identical after excluding timing fields") {
    StructureCache cache2;
    SuiteResult again = run_suite_detailed(corpus, opts, cache2);
    CHECK(report_to_json(suite, false).dump() == report_to_json(again, false).dump());
  }
}

TEST_CASE("corpus files") {
  Json j = Json::parse(R"({"cases":[
    {"group":"catalog:S3","action":"trivial"},
    {"group":{"kind":"catalog","name":"Q8"},"action":{"kind":"aut-subgroup","elementOrder":3}}
  ]})");
  auto corpus = corpus_from_json(j);
  REQUIRE(corpus.size() == 2);
  CHECK(corpus[0].case_id == "S3|trivial");
  CHECK(corpus[1].case_id == "Q8|aut-subgroup:3");
  CHECK_THROWS_AS(load_corpus_file("/nonexistent/corpus.json"), ParseError);
}

#ifdef ORBIGRAPH_CLI_PATH

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(ORBIGRAPH_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return CliResult{WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("cli: graph subcommand emits K3 in DOT") {
  CliResult r = run_cli("graph --group catalog:Q8 --action aut-subgroup:3 --format dot");
  CHECK(r.exit_code == 0);
  int edges = 0;
  for (size_t pos = 0; (pos = r.out.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
  CHECK(edges == 3);
}

TEST_CASE("cli: catalog lists entries") {
  CliResult r = run_cli("catalog");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"Q8\"") != std::string::npos);
  CHECK(r.out.find("extraspecial-27-exp3") != std::string::npos);
}

TEST_CASE("cli: gk on A5 reports three isolated primes") {
  CliResult r = run_cli("gk --group catalog:A5");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["primes"] == Json::array({"2", "3", "5"}));
  CHECK(j["edges"].empty());
  CHECK(j["quotientMatchesPrimeGraph"] == true);
}

TEST_CASE("cli: analyze emits graph plus structure") {
  CliResult r = run_cli("analyze --group catalog:S4 --action inner");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["structure"]["solvable"] == true);
  CHECK(j["structure"]["twoFrobeniusStatus"] == "found");
}

TEST_CASE("cli: verify on a small corpus file") {
  std::string path = "cli_test_corpus.json";
  {
    std::ofstream f(path);
    f << R"({"cases":[{"group":"catalog:S3","action":"trivial"},
                      {"group":"catalog:Q8","action":"aut-subgroup:3"}]})";
  }
  CliResult r = run_cli("verify --corpus " + path);
  CHECK(r.exit_code == 0);
  Json report = Json::parse(r.out);
  CHECK(report["summary"]["failed"] == 0);
  CHECK(report["summary"]["passed"].get<int>() > 0);
  std::remove(path.c_str());
}

TEST_CASE("cli: usage and parse errors exit with code 2") {
  CHECK(run_cli("graph --group catalog:NoSuch").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("graph").exit_code == 2);
  CHECK(run_cli("verify --corpus default --claims NoSuchClaim").exit_code == 2);
}

TEST_CASE("cli: budget exhaustion yields inconclusive verdicts and exit code 3") {
  std::string path = "cli_budget_corpus.json";
  {
    std::ofstream f(path);
    f << R"({"cases":[{"group":"catalog:S3","action":"trivial"}]})";
  }
  CliResult r = run_cli("verify --corpus " + path + " --budget 0");
  CHECK(r.exit_code == 3);
  Json report = Json::parse(r.out);
  CHECK(report["summary"]["inconclusive"].get<int>() > 0);
  CHECK(report["summary"]["failed"] == 0);
  std::remove(path.c_str());
}

TEST_CASE("cli: identical invocations produce identical graphs") {
  CliResult a = run_cli("graph --group catalog:S4 --action inner --format json");
  CliResult b = run_cli("graph --group catalog:S4 --action inner --format json");
  CHECK(a.out == b.out);
}

#endif  // ORBIGRAPH_CLI_PATH
