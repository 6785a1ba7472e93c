#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "action.hpp"
#include "algebra.hpp"
#include "common.hpp"
#include "graph.hpp"
#include "group.hpp"
#include "structure.hpp"

namespace orbigraph {

using Json = nlohmann::ordered_json;

enum class VerdictStatus { not_applicable, passed, failed, inconclusive };

inline const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::not_applicable: return "not-applicable";
    case VerdictStatus::passed: return "passed";
    case VerdictStatus::failed: return "failed";
    case VerdictStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

// Outcome of one claim check on one (G, A) pair.
struct Verdict {
  std::string claim_id;
  std::string case_id;
  VerdictStatus status = VerdictStatus::not_applicable;
  Json witness;
  double elapsed_ms = 0.0;

  bool applicable() const { return status != VerdictStatus::not_applicable; }
  std::optional<bool> passed() const {
    if (status == VerdictStatus::passed) return true;
    if (status == VerdictStatus::failed) return false;
    return std::nullopt;
  }
};

// One corpus entry: a group together with an action on it.
struct VerifyCase {
  GroupPtr group;
  ActionGroup action;
  std::string case_id;  // "<group>|<action>"
};

inline VerifyCase make_case(GroupPtr g, ActionGroup a) {
  VerifyCase c;
  c.case_id = g->name() + "|" + a.name();
  c.group = std::move(g);
  c.action = std::move(a);
  return c;
}

inline Verdict make_verdict(std::string claim_id, std::string case_id) {
  Verdict v;
  v.claim_id = std::move(claim_id);
  v.case_id = std::move(case_id);
  return v;
}

// Everything the checkers share for one case, built once.
struct CaseContext {
  const VerifyCase& vc;
  const Group& g;
  const ActionGroup& a;
  OrbitGraph graph;
  GraphAnalytics an;
  std::shared_ptr<const StructureReport> sr;

  CaseContext(const VerifyCase& c, StructureCache& cache, bool brute_force_edges = false)
      : vc(c), g(*c.group), a(c.action) {
    graph = commuting_graph(g, a, brute_force_edges);
    an = analyze(graph);
    sr = cache.get(c.group);
  }

  // vertices of prime-power element order, grouped by base prime
  std::map<int, std::vector<int>> prime_power_vertex_buckets() const {
    std::map<int, std::vector<int>> buckets;
    for (int v = 0; v < graph.vertex_count(); ++v) {
      int p = 0;
      if (is_prime_power(graph.vertices[v].element_order, &p)) buckets[p].push_back(v);
    }
    return buckets;
  }

  // all prime-power-order vertices, flat
  std::vector<int> prime_power_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < graph.vertex_count(); ++v)
      if (is_prime_power(graph.vertices[v].element_order)) out.push_back(v);
    return out;
  }

  // vertices adjacent (or equal, tagged by the caller) to every prime-power
  // vertex
  std::vector<int> almost_complete_vertices() const {
    std::vector<int> ppv = prime_power_vertices();
    std::vector<int> out;
    for (int z = 0; z < graph.vertex_count(); ++z) {
      bool ok = true;
      for (int v : ppv)
        if (v != z && !graph.edge(z, v)) {
          ok = false;
          break;
        }
      if (ok) out.push_back(z);
    }
    return out;
  }
};

namespace detail {

// number of A-orbits on a list of subgroups, acting by a . L = L^a
inline int action_orbit_count_on_subgroups(const ActionGroup& a,
                                           const std::vector<Subgroup>& subs) {
  std::map<std::vector<Elem>, int> index;
  for (size_t i = 0; i < subs.size(); ++i) index[subs[i].members] = static_cast<int>(i);
  std::vector<int> parent(subs.size());
  for (size_t i = 0; i < subs.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (size_t i = 0; i < subs.size(); ++i) {
    for (int gi : a.generators()) {
      const Automorphism& aut = a.at(gi);
      std::vector<Elem> image;
      image.reserve(subs[i].members.size());
      for (Elem m : subs[i].members) image.push_back(aut(m));
      std::sort(image.begin(), image.end());
      auto it = index.find(image);
      if (it == index.end())
        throw std::logic_error("automorphism image of a complement is not a complement");
      int ri = find(static_cast<int>(i)), rj = find(it->second);
      if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
    }
  }
  std::set<int> roots;
  for (size_t i = 0; i < subs.size(); ++i) roots.insert(find(static_cast<int>(i)));
  return static_cast<int>(roots.size());
}

// memoized solvability of generated subgroups, keyed by member set
class SolvabilityMemo {
 public:
  explicit SolvabilityMemo(const Group& g) : g_(g) {}

  bool solvable_of_generated(const std::vector<Elem>& seeds) {
    // abelian two-generator shortcut
    if (seeds.size() == 2 && g_.mul(seeds[0], seeds[1]) == g_.mul(seeds[1], seeds[0]))
      return true;
    auto members = closure_members(g_, seeds);
    auto it = memo_.find(members);
    if (it != memo_.end()) return it->second;
    bool s = is_solvable_subset(g_, members);
    memo_.emplace(std::move(members), s);
    return s;
  }

 private:
  const Group& g_;
  std::unordered_map<std::vector<Elem>, bool, IntVecHash> memo_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Claim checkers.  Each returns a Verdict; `status == not_applicable` means
// the hypotheses do not hold for this case.  Vacuously true hypotheses are
// treated as applicable and tagged in the witness.

// Subaction monotonicity: components can only merge and distances only
// shrink when the action grows.
inline Verdict check_lemma_2_1(const CaseContext& ctx, const ActionGroup& b) {
  Verdict v = make_verdict("Lem2.1", ctx.vc.case_id);
  if (!b.subset_of(ctx.a)) throw std::logic_error("Lem2.1 requires B <= A");
  OrbitGraph gb = commuting_graph(ctx.g, b);
  GraphAnalytics anb = analyze(gb);
  bool part2 = ctx.an.component_count <= anb.component_count;
  bool part1_applicable = anb.connected && gb.vertex_count() > 0;
  bool part1 = !part1_applicable || ctx.an.diameter <= anb.diameter;
  v.status = (part1 && part2) ? VerdictStatus::passed : VerdictStatus::failed;
  v.witness = Json{{"subaction", b.name()},
                   {"subactionSize", b.size()},
                   {"componentsA", ctx.an.component_count},
                   {"componentsB", anb.component_count},
                   {"diameterComparable", part1_applicable},
                   {"diameterA", ctx.an.diameter},
                   {"diameterB", anb.diameter}};
  return v;
}

// For solvable G: disconnected iff Frobenius or 2-Frobenius; when
// disconnected the component count is m+1 where m counts A-orbits on the
// Frobenius complements of the lower Frobenius subgroup (complements of K in
// G, respectively in KL); when connected the diameter is at most 8.
inline Verdict check_thm_2_2(const CaseContext& ctx) {
  Verdict v = make_verdict("Thm2.2", ctx.vc.case_id);
  if (!ctx.sr->solvable) {
    v.witness = Json{{"reason", "G not solvable"}};
    return v;
  }
  if (ctx.sr->frobenius_status == DetectStatus::budget_exceeded ||
      ctx.sr->two_frobenius_status == DetectStatus::budget_exceeded) {
    v.status = VerdictStatus::inconclusive;
    v.witness = Json{{"reason", "Frobenius search budget exhausted"}};
    return v;
  }
  const bool is_frob = ctx.sr->frobenius.has_value();
  const bool is_2frob = ctx.sr->two_frobenius.has_value();
  const bool disconnected = ctx.graph.vertex_count() > 0 && ctx.an.component_count > 1;
  v.witness = Json{{"disconnected", disconnected},
                   {"frobenius", is_frob},
                   {"twoFrobenius", is_2frob},
                   {"components", ctx.an.component_count}};
  if (disconnected != (is_frob || is_2frob)) {
    v.status = VerdictStatus::failed;
    v.witness["reason"] = "disconnectedness does not match Frobenius structure";
    return v;
  }
  bool ok = true;
  if (disconnected) {
    // m from the primary interpretation; if both structures are detected the
    // secondary count is recorded alongside
    int m = -1;
    if (is_frob)
      m = detail::action_orbit_count_on_subgroups(ctx.a, ctx.sr->frobenius->complements);
    else
      m = detail::action_orbit_count_on_subgroups(ctx.a,
                                                  ctx.sr->two_frobenius->lower_frobenius.complements);
    v.witness["m"] = m;
    if (is_frob && is_2frob) {
      int m2 = detail::action_orbit_count_on_subgroups(
          ctx.a, ctx.sr->two_frobenius->lower_frobenius.complements);
      v.witness["mTwoFrobenius"] = m2;
    }
    ok = ctx.an.component_count == m + 1;
  } else {
    v.witness["diameter"] = ctx.an.diameter;
    ok = ctx.an.diameter <= 8;
  }
  v.status = ok ? VerdictStatus::passed : VerdictStatus::failed;
  return v;
}

// Hypothesis of the nilpotency criterion: for x a p-element and y a
// q-element (p != q), the orbits x^A and y^A are adjacent.  Works on orbit
// representatives since adjacency is an orbit-level relation.
inline bool thm_3_2_hypothesis(const CaseContext& ctx, Json* witness = nullptr) {
  auto buckets = ctx.prime_power_vertex_buckets();
  int pairs = 0;
  for (auto it = buckets.begin(); it != buckets.end(); ++it)
    for (auto jt = std::next(it); jt != buckets.end(); ++jt)
      for (int v : it->second)
        for (int w : jt->second) {
          ++pairs;
          if (v == w) continue;  // same orbit: no loop in a simple graph, satisfied
          if (!ctx.graph.edge(v, w)) {
            if (witness)
              *witness = Json{{"hypothesis", false},
                              {"x", ctx.graph.vertices[v].rep()},
                              {"y", ctx.graph.vertices[w].rep()},
                              {"xOrder", ctx.graph.vertices[v].element_order},
                              {"yOrder", ctx.graph.vertices[w].element_order}};
            return false;
          }
        }
  if (witness) {
    *witness = Json{{"hypothesis", true}, {"pairsChecked", pairs}};
    if (pairs == 0) (*witness)["vacuous"] = true;
  }
  return true;
}

inline Verdict check_thm_3_2(const CaseContext& ctx) {
  Verdict v = make_verdict("Thm3.2", ctx.vc.case_id);
  Json w;
  if (!thm_3_2_hypothesis(ctx, &w)) {
    v.witness = w;
    return v;  // not applicable, witness records the failing pair
  }
  v.witness = w;
  v.witness["nilpotent"] = ctx.sr->nilpotent;
  v.status = ctx.sr->nilpotent ? VerdictStatus::passed : VerdictStatus::failed;
  return v;
}

// complete graph forces nilpotency
inline Verdict check_thm_3_3(const CaseContext& ctx) {
  Verdict v = make_verdict("Thm3.3", ctx.vc.case_id);
  if (!ctx.an.is_complete) {
    v.witness = Json{{"reason", "graph not complete"}};
    return v;
  }
  v.witness = Json{{"complete", true}, {"nilpotent", ctx.sr->nilpotent}};
  v.status = ctx.sr->nilpotent ? VerdictStatus::passed : VerdictStatus::failed;
  return v;
}

// a vertex adjacent to all prime-power vertices with nilpotent centralizer
// forces nilpotency
inline Verdict check_cor_3_4(const CaseContext& ctx) {
  Verdict v = make_verdict("Cor3.4", ctx.vc.case_id);
  for (int z : ctx.almost_complete_vertices()) {
    Elem rep = ctx.graph.vertices[z].rep();
    Subgroup c = centralizer(ctx.g, rep);
    if (!is_nilpotent_subset(ctx.g, c.members)) continue;
    v.witness = Json{{"z", rep},
                     {"centralizerOrder", c.order()},
                     {"sameOrbitPairsTreatedAdjacent", true},
                     {"nilpotent", ctx.sr->nilpotent}};
    v.status = ctx.sr->nilpotent ? VerdictStatus::passed : VerdictStatus::failed;
    return v;
  }
  v.witness = Json{{"reason", "no almost-complete vertex with nilpotent centralizer"}};
  return v;
}

// Solvability criterion: for every p-element x and q-element y (p != q) some
// a in A makes <x, y^a> solvable.  The predicate only depends on the orbits
// of x and y, so representatives suffice.  For nonsolvable G the returned
// witness carries a concrete pair for which every a fails.
inline Verdict check_thm_3_6(const CaseContext& ctx) {
  Verdict v = make_verdict("Thm3.6", ctx.vc.case_id);
  detail::SolvabilityMemo memo(ctx.g);
  auto buckets = ctx.prime_power_vertex_buckets();
  int pairs = 0;
  for (auto it = buckets.begin(); it != buckets.end(); ++it)
    for (auto jt = std::next(it); jt != buckets.end(); ++jt)
      for (int vv : it->second)
        for (int ww : jt->second) {
          ++pairs;
          Elem x = ctx.graph.vertices[vv].rep();
          Elem y = ctx.graph.vertices[ww].rep();
          bool found = false;
          for (const Automorphism& aut : ctx.a.elements())
            if (memo.solvable_of_generated({x, aut(y)})) {
              found = true;
              break;
            }
          if (!found) {
            v.witness = Json{{"hypothesis", false},
                             {"x", x},
                             {"y", y},
                             {"xOrder", ctx.g.element_order(x)},
                             {"yOrder", ctx.g.element_order(y)},
                             {"note", "<x, y^a> nonsolvable for every a"}};
            return v;  // not applicable; witness pair recorded
          }
        }
  v.witness = Json{{"hypothesis", true}, {"pairsChecked", pairs}, {"solvable", ctx.sr->solvable}};
  if (pairs == 0) v.witness["vacuous"] = true;
  v.status = ctx.sr->solvable ? VerdictStatus::passed : VerdictStatus::failed;
  return v;
}

// as Cor3.4 with solvable in place of nilpotent
inline Verdict check_cor_3_7(const CaseContext& ctx) {
  Verdict v = make_verdict("Cor3.7", ctx.vc.case_id);
  for (int z : ctx.almost_complete_vertices()) {
    Elem rep = ctx.graph.vertices[z].rep();
    Subgroup c = centralizer(ctx.g, rep);
    if (!is_solvable_subset(ctx.g, c.members)) continue;
    v.witness = Json{{"z", rep},
                     {"centralizerOrder", c.order()},
                     {"solvable", ctx.sr->solvable}};
    v.status = ctx.sr->solvable ? VerdictStatus::passed : VerdictStatus::failed;
    return v;
  }
  v.witness = Json{{"reason", "no almost-complete vertex with solvable centralizer"}};
  return v;
}

// If the images of H under A cover all prime-power-order elements, then
// solvability (nilpotency) of H forces that of G.
inline Verdict check_prop_3_9_generalized(const CaseContext& ctx, const Subgroup& h) {
  Verdict v = make_verdict("Prop3.9", ctx.vc.case_id);
  IndexSet covered(ctx.g.order());
  for (const Automorphism& aut : ctx.a.elements())
    for (Elem m : h.members) covered.set(aut(m));
  for (Elem x = 1; x < ctx.g.order(); ++x)
    if (is_prime_power(ctx.g.element_order(x)) && !covered.test(x)) {
      v.witness = Json{{"reason", "union of H^a misses a prime-power element"},
                       {"hOrder", h.order()},
                       {"missed", x}};
      return v;
    }
  bool h_solv = is_solvable_subset(ctx.g, h.members);
  bool h_nilp = is_nilpotent_subset(ctx.g, h.members);
  bool ok = (!h_solv || ctx.sr->solvable) && (!h_nilp || ctx.sr->nilpotent);
  v.witness = Json{{"hOrder", h.order()},
                   {"hSolvable", h_solv},
                   {"hNilpotent", h_nilp},
                   {"gSolvable", ctx.sr->solvable},
                   {"gNilpotent", ctx.sr->nilpotent}};
  v.status = ok ? VerdictStatus::passed : VerdictStatus::failed;
  return v;
}

// Suite form: H ranges over centralizers of orbit representatives (the shape
// the corollaries use) plus G itself; one aggregated verdict.
inline Verdict check_prop_3_9_suite(const CaseContext& ctx) {
  Verdict v = make_verdict("Prop3.9", ctx.vc.case_id);
  std::set<std::vector<Elem>> seen;
  std::vector<Subgroup> hs{whole_group(ctx.g)};
  seen.insert(hs.front().members);
  for (const Orbit& o : ctx.graph.vertices) {
    Subgroup c = centralizer(ctx.g, o.rep());
    if (seen.insert(c.members).second) hs.push_back(std::move(c));
  }
  int applicable = 0, failed = 0;
  Json entries = Json::array();
  for (const Subgroup& h : hs) {
    Verdict sub = check_prop_3_9_generalized(ctx, h);
    if (!sub.applicable()) continue;
    ++applicable;
    if (sub.status == VerdictStatus::failed) {
      ++failed;
      entries.push_back(sub.witness);
    } else if (entries.size() < 4) {
      entries.push_back(sub.witness);
    }
  }
  if (applicable == 0) {
    v.witness = Json{{"reason", "no qualifying H among centralizers"}};
    return v;
  }
  v.witness = Json{{"applicableSubgroups", applicable}, {"checked", entries}};
  v.status = failed == 0 ? VerdictStatus::passed : VerdictStatus::failed;
  return v;
}

// A complete vertex z^A with z of p-power order whose centralizer contains a
// full Sylow p-subgroup forces z into O_p(G).
inline Verdict check_prop_3_11(const CaseContext& ctx) {
  Verdict v = make_verdict("Prop3.11", ctx.vc.case_id);
  int applicable = 0;
  bool all_ok = true;
  Json entries = Json::array();
  for (int z : ctx.an.complete_vertices) {
    Elem rep = ctx.graph.vertices[z].rep();
    int p = 0;
    if (!is_prime_power(ctx.g.element_order(rep), &p)) continue;
    Subgroup c = centralizer(ctx.g, rep);
    if (p_part(c.order(), p) != p_part(ctx.g.order(), p)) continue;
    ++applicable;
    bool in_core = ctx.sr->p_cores.at(p).contains(rep);
    all_ok = all_ok && in_core;
    entries.push_back(Json{{"z", rep}, {"p", p}, {"inPCore", in_core}});
  }
  if (applicable == 0) {
    v.witness = Json{{"reason", "no qualifying complete vertex"}};
    return v;
  }
  v.witness = Json{{"verticesChecked", applicable}, {"entries", entries}};
  v.status = all_ok ? VerdictStatus::passed : VerdictStatus::failed;
  return v;
}

// An isolated vertex in a centerless group: its centralizer is an elementary
// abelian Sylow p-subgroup and a CC-subgroup, for each p dividing the order
// of the representative (which the claim forces to be prime).
inline Verdict check_prop_4_1(const CaseContext& ctx) {
  Verdict v = make_verdict("Prop4.1", ctx.vc.case_id);
  if (ctx.sr->center_order != 1) {
    v.witness = Json{{"reason", "center nontrivial"}};
    return v;
  }
  if (ctx.an.isolated_vertices.empty()) {
    v.witness = Json{{"reason", "no isolated vertex"}};
    return v;
  }
  bool all_ok = true;
  Json entries = Json::array();
  for (int iv : ctx.an.isolated_vertices) {
    Elem gx = ctx.graph.vertices[iv].rep();
    Subgroup c = centralizer(ctx.g, gx);
    for (int p : prime_factors(ctx.g.element_order(gx))) {
      bool sylow_p = c.order() == p_part(ctx.g.order(), p);
      bool elem_ab = is_elementary_abelian(c);
      bool cc = is_cc_subgroup(ctx.g, c);
      bool ok = sylow_p && elem_ab && cc;
      all_ok = all_ok && ok;
      entries.push_back(Json{{"g", gx},
                             {"gOrder", ctx.g.element_order(gx)},
                             {"p", p},
                             {"centralizerOrder", c.order()},
                             {"sylow", sylow_p},
                             {"elementaryAbelian", elem_ab},
                             {"ccSubgroup", cc}});
    }
  }
  v.witness = Json{{"isolated", entries}};
  v.status = all_ok ? VerdictStatus::passed : VerdictStatus::failed;
  return v;
}

// Edgeless multi-vertex graph over a centerless group: G is the simple group
// of order 60 or Frobenius with elementary abelian kernel and prime-order
// complement, and every Sylow subgroup P has P \ {1} as one N_A(P)-orbit.
inline Verdict check_thm_4_2(const CaseContext& ctx) {
  Verdict v = make_verdict("Thm4.2", ctx.vc.case_id);
  if (ctx.sr->center_order != 1) {
    v.witness = Json{{"reason", "center nontrivial"}};
    return v;
  }
  bool edgeless = ctx.graph.edge_list().empty();
  if (!(edgeless && ctx.graph.vertex_count() >= 2)) {
    v.status = VerdictStatus::passed;
    v.witness = Json{{"vacuous", true},
                     {"reason", "graph has edges or fewer than two vertices"}};
    return v;
  }
  if (ctx.sr->frobenius_status == DetectStatus::budget_exceeded) {
    v.status = VerdictStatus::inconclusive;
    v.witness = Json{{"reason", "Frobenius search budget exhausted"}};
    return v;
  }
  bool simple60 = false;
  if (ctx.g.order() == 60) simple60 = normal_subgroups(ctx.g).size() == 2;
  bool frob_branch = false;
  if (ctx.sr->frobenius) {
    const FrobeniusData& fd = *ctx.sr->frobenius;
    frob_branch = is_elementary_abelian(fd.kernel) && !fd.complements.empty() &&
                  is_prime(fd.complements.front().order());
  }
  Json sylow_orbits = Json::array();
  bool sylow_clause = true;
  for (int p : ctx.g.primes()) {
    const Subgroup& syl = ctx.sr->sylow.at(p);
    ActionGroup na = stabilizer_action_on_subgroup(ctx.a, syl);
    int orbit_count = static_cast<int>(orbits(na).size());
    sylow_orbits.push_back(Json{{"p", p}, {"orbitsOnNonidentity", orbit_count}});
    if (orbit_count != 1) sylow_clause = false;
  }
  bool ok = (simple60 || frob_branch) && sylow_clause;
  v.witness = Json{{"edgeless", true},
                   {"vertices", ctx.graph.vertex_count()},
                   {"simpleOrder60", simple60},
                   {"frobeniusBranch", frob_branch},
                   {"sylowTransitivity", sylow_clause},
                   {"sylowOrbits", sylow_orbits}};
  v.status = ok ? VerdictStatus::passed : VerdictStatus::failed;
  return v;
}

// Triangle-free graph: every element order divides p^2, G is a CP-group;
// nonsolvable cases are confined to a short order list or have O_2(G) != 1.
inline Verdict check_thm_5_2(const CaseContext& ctx) {
  Verdict v = make_verdict("Thm5.2", ctx.vc.case_id);
  if (ctx.an.triangle) {
    v.witness = Json{{"reason", "graph has a triangle"},
                     {"triangle", {(*ctx.an.triangle)[0], (*ctx.an.triangle)[1],
                                   (*ctx.an.triangle)[2]}}};
    return v;
  }
  bool orders_ok = ctx.sr->orders_divide_p2;
  bool cp = ctx.sr->cp_group;
  bool nonsolvable_ok = true;
  if (!ctx.sr->solvable) {
    static const std::set<int> known_orders{60, 168, 504, 360, 20160};
    bool o2 = ctx.sr->p_cores.count(2) && ctx.sr->p_cores.at(2).order() > 1;
    nonsolvable_ok = known_orders.count(ctx.g.order()) > 0 || o2;
    v.witness["nonsolvableBranch"] =
        Json{{"order", ctx.g.order()}, {"o2Nontrivial", o2}};
  }
  v.witness["ordersDividePSquared"] = orders_ok;
  v.witness["cpGroup"] = cp;
  v.status = (orders_ok && cp && nonsolvable_ok) ? VerdictStatus::passed
                                                 : VerdictStatus::failed;
  return v;
}

// The quotient of the prime-order subgraph modulo the V_p blocks reproduces
// the prime graph.
inline Verdict check_gk_quotient(const CaseContext& ctx) {
  Verdict v = make_verdict("GKQuotient", ctx.vc.case_id);
  bool ok = gk_via_quotient_check(ctx.g, ctx.graph);
  v.witness = Json{{"primes", ctx.g.primes()}, {"match", ok}};
  v.status = ok ? VerdictStatus::passed : VerdictStatus::failed;
  return v;
}

// ---------------------------------------------------------------------------
// Suite driver

inline const std::vector<std::string>& all_claim_ids() {
  static const std::vector<std::string> ids{
      "Lem2.1", "Thm2.2", "Thm3.2", "Thm3.3", "Cor3.4",  "Thm3.6",
      "Cor3.7", "Prop3.9", "Prop3.11", "Prop4.1", "Thm4.2", "Thm5.2",
      "GKQuotient"};
  return ids;
}

struct VerifyOptions {
  SearchBudget budget;
  bool brute_force_edges = false;
  int jobs = 1;
  std::vector<std::string> claims;  // empty = all
};

struct CaseResult {
  const VerifyCase* vc = nullptr;
  OrbitGraph graph;
  GraphAnalytics an;
  std::shared_ptr<const StructureReport> sr;
  std::vector<Verdict> verdicts;
};

struct SuiteResult {
  std::vector<CaseResult> cases;

  std::vector<Verdict> flat_verdicts() const {
    std::vector<Verdict> out;
    for (const auto& c : cases)
      out.insert(out.end(), c.verdicts.begin(), c.verdicts.end());
    std::stable_sort(out.begin(), out.end(), [](const Verdict& a, const Verdict& b) {
      if (a.case_id != b.case_id) return a.case_id < b.case_id;
      return a.claim_id < b.claim_id;
    });
    return out;
  }

  std::map<std::string, int> summary() const {
    std::map<std::string, int> s{{"passed", 0}, {"failed", 0}, {"inconclusive", 0},
                                 {"notApplicable", 0}};
    for (const auto& c : cases)
      for (const auto& v : c.verdicts) switch (v.status) {
          case VerdictStatus::passed: ++s["passed"]; break;
          case VerdictStatus::failed: ++s["failed"]; break;
          case VerdictStatus::inconclusive: ++s["inconclusive"]; break;
          case VerdictStatus::not_applicable: ++s["notApplicable"]; break;
        }
    return s;
  }
};

inline CaseResult run_case(const VerifyCase& vc, StructureCache& cache,
                           const VerifyOptions& opts) {
  CaseContext ctx(vc, cache, opts.brute_force_edges);
  auto wanted = [&](const std::string& id) {
    if (opts.claims.empty()) return true;
    return std::find(opts.claims.begin(), opts.claims.end(), id) != opts.claims.end();
  };
  CaseResult res;
  res.vc = &vc;
  auto timed = [&](const std::string& id, auto&& fn) {
    if (!wanted(id)) return;
    auto t0 = std::chrono::steady_clock::now();
    Verdict v = fn();
    v.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    res.verdicts.push_back(std::move(v));
  };
  timed("Lem2.1", [&] { return check_lemma_2_1(ctx, trivial_action(vc.group)); });
  timed("Thm2.2", [&] { return check_thm_2_2(ctx); });
  timed("Thm3.2", [&] { return check_thm_3_2(ctx); });
  timed("Thm3.3", [&] { return check_thm_3_3(ctx); });
  timed("Cor3.4", [&] { return check_cor_3_4(ctx); });
  timed("Thm3.6", [&] { return check_thm_3_6(ctx); });
  timed("Cor3.7", [&] { return check_cor_3_7(ctx); });
  timed("Prop3.9", [&] { return check_prop_3_9_suite(ctx); });
  timed("Prop3.11", [&] { return check_prop_3_11(ctx); });
  timed("Prop4.1", [&] { return check_prop_4_1(ctx); });
  timed("Thm4.2", [&] { return check_thm_4_2(ctx); });
  timed("Thm5.2", [&] { return check_thm_5_2(ctx); });
  timed("GKQuotient", [&] { return check_gk_quotient(ctx); });
  res.graph = std::move(ctx.graph);
  res.an = std::move(ctx.an);
  res.sr = ctx.sr;
  return res;
}

// Runs every requested checker on every case.  Case-level work may fan out
// to `jobs` workers; results land in corpus order regardless of completion
// order, so output is deterministic.
inline SuiteResult run_suite_detailed(const std::vector<VerifyCase>& corpus,
                                      const VerifyOptions& opts, StructureCache& cache) {
  SuiteResult out;
  out.cases.resize(corpus.size());
  if (opts.jobs <= 1 || corpus.size() <= 1) {
    for (size_t i = 0; i < corpus.size(); ++i)
      out.cases[i] = run_case(corpus[i], cache, opts);
    return out;
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= corpus.size()) return;
      out.cases[i] = run_case(corpus[i], cache, opts);
    }
  };
  std::vector<std::thread> pool;
  int jobs = std::min<int>(opts.jobs, static_cast<int>(corpus.size()));
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

inline std::vector<Verdict> run_suite(const std::vector<VerifyCase>& corpus,
                                      const VerifyOptions& opts = {}) {
  StructureCache cache(opts.budget);
  return run_suite_detailed(corpus, opts, cache).flat_verdicts();
}

}  // namespace orbigraph
