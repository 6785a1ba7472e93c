#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "action.hpp"
#include "catalog.hpp"
#include "common.hpp"
#include "graph.hpp"
#include "group.hpp"
#include "structure.hpp"
#include "verify.hpp"

namespace orbigraph {

// ---------------------------------------------------------------------------
// Group and action specs (JSON documents)

// {"kind":"permutation","degree":n,"generators":[[cycle,...],...]}
// {"kind":"table","order":n,"table":[[...],...]}
// {"kind":"catalog","name":"Q8"}
struct GroupSpec {
  std::string kind;
  int degree = 0;
  std::vector<std::vector<std::vector<int>>> generators;  // per generator: cycles
  int order = 0;
  std::vector<std::vector<int>> table;
  std::string name;
};

// {"kind":"trivial"} | {"kind":"inner"} | {"kind":"full-aut"}
// {"kind":"generators","maps":[[...],...]}
// {"kind":"aut-subgroup","elementOrder":n}   (n = order of the subgroup)
struct ActionSpec {
  std::string kind;
  std::vector<std::vector<int>> maps;
  int element_order = 0;
};

namespace detail {

template <typename T>
T get_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field: ") + key);
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad field ") + key + ": " + e.what());
  }
}

}  // namespace detail

inline GroupSpec parse_group_spec(const Json& j) {
  GroupSpec s;
  s.kind = detail::get_field<std::string>(j, "kind");
  if (s.kind == "permutation") {
    s.degree = detail::get_field<int>(j, "degree");
    s.generators =
        detail::get_field<std::vector<std::vector<std::vector<int>>>>(j, "generators");
  } else if (s.kind == "table") {
    s.order = detail::get_field<int>(j, "order");
    s.table = detail::get_field<std::vector<std::vector<int>>>(j, "table");
    if (static_cast<int>(s.table.size()) != s.order)
      throw ParseError("table size does not match order");
  } else if (s.kind == "catalog") {
    s.name = detail::get_field<std::string>(j, "name");
  } else {
    throw ParseError("unknown group spec kind: " + s.kind);
  }
  return s;
}

inline ActionSpec parse_action_spec(const Json& j) {
  ActionSpec s;
  s.kind = detail::get_field<std::string>(j, "kind");
  if (s.kind == "generators") {
    s.maps = detail::get_field<std::vector<std::vector<int>>>(j, "maps");
  } else if (s.kind == "aut-subgroup") {
    s.element_order = detail::get_field<int>(j, "elementOrder");
  } else if (s.kind != "trivial" && s.kind != "inner" && s.kind != "full-aut") {
    throw ParseError("unknown action spec kind: " + s.kind);
  }
  return s;
}

inline GroupPtr build_group(const GroupSpec& s, const GroupOptions& opts = {}) {
  if (s.kind == "catalog") return catalog_group(s.name, opts);
  if (s.kind == "table")
    return std::make_shared<Group>(Group::from_table(s.table, opts, "table" + std::to_string(s.order)));
  std::vector<Permutation> gens;
  for (const auto& cycles : s.generators) {
    try {
      gens.push_back(permutation_from_cycles(s.degree, cycles));
    } catch (const InvalidPermutation& e) {
      throw ParseError(std::string("bad generator: ") + e.what());
    }
  }
  return std::make_shared<Group>(
      Group::from_generators(s.degree, std::move(gens), opts,
                             "perm" + std::to_string(s.degree)));
}

inline ActionGroup build_action(const ActionSpec& s, GroupPtr g,
                                const ActionOptions& opts = {}) {
  if (s.kind == "trivial") return trivial_action(g);
  if (s.kind == "inner") return inner_action(g);
  if (s.kind == "full-aut") return full_automorphism_group(g, opts);
  if (s.kind == "aut-subgroup") return aut_subgroup_action(g, s.element_order, opts);
  std::vector<Automorphism> maps;
  for (const auto& m : s.maps) maps.emplace_back(m);
  return action_from_generators(g, maps, opts);
}

// CLI shorthand: "catalog:NAME" or a path to a JSON group spec
inline GroupPtr resolve_group_arg(const std::string& arg, const GroupOptions& opts = {}) {
  if (arg.rfind("catalog:", 0) == 0) return catalog_group(arg.substr(8), opts);
  std::ifstream in(arg);
  if (!in) throw ParseError("cannot open group spec file: " + arg);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("bad JSON in " + arg + ": " + e.what());
  }
  return build_group(parse_group_spec(j), opts);
}

// CLI shorthand: "trivial" | "inner" | "full-aut" | "aut-subgroup:N" | file path
inline ActionGroup resolve_action_arg(const std::string& arg, GroupPtr g,
                                      const ActionOptions& opts = {}) {
  if (arg == "trivial" || arg == "inner" || arg == "full-aut") {
    ActionSpec s;
    s.kind = arg;
    return build_action(s, g, opts);
  }
  if (arg.rfind("aut-subgroup:", 0) == 0) {
    ActionSpec s;
    s.kind = "aut-subgroup";
    try {
      s.element_order = std::stoi(arg.substr(13));
    } catch (...) {
      throw ParseError("bad aut-subgroup order in: " + arg);
    }
    return build_action(s, g, opts);
  }
  std::ifstream in(arg);
  if (!in) throw ParseError("cannot open action spec file: " + arg);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("bad JSON in " + arg + ": " + e.what());
  }
  return build_action(parse_action_spec(j), g, opts);
}

// ---------------------------------------------------------------------------
// Graph export / import

inline Json analytics_to_json(const GraphAnalytics& an) {
  Json j{{"connected", an.connected},
         {"componentCount", an.component_count},
         {"componentAssignment", an.component},
         {"diameter", an.diameter},
         {"componentDiameters", an.component_diameters},
         {"isComplete", an.is_complete},
         {"completeVertices", an.complete_vertices},
         {"isolatedVertices", an.isolated_vertices}};
  if (an.triangle)
    j["triangle"] = {(*an.triangle)[0], (*an.triangle)[1], (*an.triangle)[2]};
  else
    j["triangle"] = nullptr;
  return j;
}

inline Json graph_to_json(const OrbitGraph& g) {
  Json vertices = Json::array();
  for (const Orbit& o : g.vertices)
    vertices.push_back(Json{{"rep", o.rep()}, {"size", o.size()}, {"elementOrder", o.element_order}});
  Json edges = Json::array();
  for (auto [i, j] : g.edge_list()) edges.push_back({i, j});
  return Json{{"group", g.group_name},
              {"action", g.action_name},
              {"vertices", vertices},
              {"edges", edges},
              {"analytics", analytics_to_json(analyze(g))}};
}

// vertex names are o<representativeIndex>; undirected, stable ordering
inline std::string graph_to_dot(const OrbitGraph& g) {
  std::ostringstream os;
  os << "graph \"" << (g.group_name.empty() ? "G" : g.group_name) << "\" {\n";
  for (const Orbit& o : g.vertices)
    os << "  o" << o.rep() << " [label=\"o" << o.rep() << " size=" << o.size()
       << " ord=" << o.element_order << "\"];\n";
  for (auto [i, j] : g.edge_list())
    os << "  o" << g.vertices[i].rep() << " -- o" << g.vertices[j].rep() << ";\n";
  os << "}\n";
  return os.str();
}

// The comparable content of an exported graph (provenance, vertex data,
// adjacency); analytics are derived and ignored on import.
struct GraphDoc {
  std::string group, action;
  std::vector<std::array<int, 3>> vertices;  // rep, size, elementOrder
  std::vector<std::pair<int, int>> edges;

  bool operator==(const GraphDoc& o) const = default;
};

inline GraphDoc graph_doc(const OrbitGraph& g) {
  GraphDoc d;
  d.group = g.group_name;
  d.action = g.action_name;
  for (const Orbit& o : g.vertices) d.vertices.push_back({o.rep(), o.size(), o.element_order});
  d.edges = g.edge_list();
  return d;
}

inline GraphDoc import_graph_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad graph JSON: ") + e.what());
  }
  GraphDoc d;
  d.group = detail::get_field<std::string>(j, "group");
  d.action = detail::get_field<std::string>(j, "action");
  for (const Json& v : j.at("vertices"))
    d.vertices.push_back({detail::get_field<int>(v, "rep"), detail::get_field<int>(v, "size"),
                          detail::get_field<int>(v, "elementOrder")});
  for (const Json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("bad edge entry");
    d.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return d;
}

// ---------------------------------------------------------------------------
// Structure report and verdicts as JSON

inline Json subgroup_to_json(const Subgroup& s) {
  return Json{{"order", s.order()}, {"members", s.members}};
}

inline Json structure_to_json(const StructureReport& r) {
  Json j{{"nilpotent", r.nilpotent},
         {"solvable", r.solvable},
         {"cpGroup", r.cp_group},
         {"ordersDividePSquared", r.orders_divide_p2},
         {"centerOrder", r.center_order}};
  auto status_str = [](DetectStatus s) {
    return s == DetectStatus::found ? "found"
           : s == DetectStatus::none ? "none"
                                     : "budget-exceeded";
  };
  j["frobeniusStatus"] = status_str(r.frobenius_status);
  if (r.frobenius) {
    Json comps = Json::array();
    for (const auto& c : r.frobenius->complements) comps.push_back(subgroup_to_json(c));
    j["frobenius"] = Json{{"kernel", subgroup_to_json(r.frobenius->kernel)},
                          {"complements", comps},
                          {"onePerConjClass", r.frobenius->one_per_conj_class}};
  }
  j["twoFrobeniusStatus"] = status_str(r.two_frobenius_status);
  if (r.two_frobenius) {
    Json comps = Json::array();
    for (const auto& c : r.two_frobenius->lower_frobenius.complements)
      comps.push_back(subgroup_to_json(c));
    j["twoFrobenius"] = Json{{"k", subgroup_to_json(r.two_frobenius->k)},
                             {"kl", subgroup_to_json(r.two_frobenius->kl)},
                             {"lowerComplements", comps},
                             {"upperFrobeniusVerified", r.two_frobenius->upper_frobenius_verified}};
  }
  Json syl = Json::object();
  for (const auto& [p, s] : r.sylow) syl[std::to_string(p)] = s.order();
  j["sylowOrders"] = syl;
  Json cores = Json::object();
  for (const auto& [p, s] : r.p_cores) cores[std::to_string(p)] = s.order();
  j["pCoreOrders"] = cores;
  return j;
}

inline Json verdict_to_json(const Verdict& v, bool with_timing = true) {
  Json j{{"claimId", v.claim_id},
         {"caseId", v.case_id},
         {"applicable", v.applicable()}};
  if (auto p = v.passed()) j["passed"] = *p;
  j["status"] = to_string(v.status);
  j["witness"] = v.witness;
  if (with_timing) j["elapsedMs"] = v.elapsed_ms;
  return j;
}

// Report schema:
// {"version", "cases":[{"group","action","graph","structure","verdicts"}],
//  "summary":{"passed","failed","inconclusive","notApplicable"}}
inline Json report_to_json(const SuiteResult& suite, bool with_timing = true) {
  Json cases = Json::array();
  std::vector<const CaseResult*> ordered;
  for (const auto& c : suite.cases) ordered.push_back(&c);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const CaseResult* a, const CaseResult* b) {
                     return a->vc->case_id < b->vc->case_id;
                   });
  for (const CaseResult* c : ordered) {
    Json verdicts = Json::array();
    std::vector<Verdict> vs = c->verdicts;
    std::stable_sort(vs.begin(), vs.end(),
                     [](const Verdict& a, const Verdict& b) { return a.claim_id < b.claim_id; });
    for (const auto& v : vs) verdicts.push_back(verdict_to_json(v, with_timing));
    Json action = Json{{"name", c->vc->action.name()}, {"size", c->vc->action.size()}};
    if (c->vc->action.name().rfind("aut-subgroup", 0) == 0) {
      Json gens = Json::array();
      for (int gi : c->vc->action.generators()) gens.push_back(c->vc->action.at(gi).map);
      action["generators"] = gens;
    }
    cases.push_back(Json{{"group", c->vc->group->name()},
                         {"action", action},
                         {"graph", graph_to_json(c->graph)},
                         {"structure", structure_to_json(*c->sr)},
                         {"verdicts", verdicts}});
  }
  Json summary = Json::object();
  for (const auto& [k, v] : suite.summary()) summary[k] = v;
  return Json{{"version", "1"}, {"cases", cases}, {"summary", summary}};
}

// ---------------------------------------------------------------------------
// Corpora

struct CorpusOptions {
  GroupOptions group;
  ActionOptions action;
};

// Catalog-derived default corpus: every entry with the trivial, inner and
// full-aut actions, skipping full-aut where the caps rule it out.
inline std::vector<VerifyCase> default_corpus(const CorpusOptions& opts = {}) {
  std::vector<VerifyCase> corpus;
  for (const auto& entry : catalog()) {
    GroupPtr g = catalog_group(entry.name, opts.group);
    corpus.push_back(make_case(g, trivial_action(g)));
    corpus.push_back(make_case(g, inner_action(g)));
    try {
      corpus.push_back(make_case(g, full_automorphism_group(g, opts.action)));
    } catch (const AutCapExceeded&) {
      // beyond the cap; the group still appears with the other actions
    }
  }
  return corpus;
}

// {"cases":[{"group": <spec or "catalog:NAME">, "action": <spec or name>}]}
inline std::vector<VerifyCase> corpus_from_json(const Json& j, const CorpusOptions& opts = {}) {
  std::vector<VerifyCase> corpus;
  for (const Json& c : j.at("cases")) {
    GroupPtr g;
    if (c.at("group").is_string())
      g = resolve_group_arg(c.at("group").get<std::string>(), opts.group);
    else
      g = build_group(parse_group_spec(c.at("group")), opts.group);
    ActionGroup a;
    if (c.at("action").is_string())
      a = resolve_action_arg(c.at("action").get<std::string>(), g, opts.action);
    else
      a = build_action(parse_action_spec(c.at("action")), g, opts.action);
    corpus.push_back(make_case(std::move(g), std::move(a)));
  }
  return corpus;
}

inline std::vector<VerifyCase> load_corpus_file(const std::string& path,
                                                const CorpusOptions& opts = {}) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open corpus file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("bad JSON in " + path + ": " + e.what());
  }
  return corpus_from_json(j, opts);
}

}  // namespace orbigraph
