// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion carries a wall-clock limit that is enforced.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "orbigraph/orbigraph.hpp"

using namespace orbigraph;

namespace {

struct CriterionCheck {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

int g_failures = 0;

void run_criterion(const std::string& label, double limit_seconds,
                   const std::function<void(CriterionCheck&)>& body) {
  CriterionCheck c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= limit_seconds) c.require(false, "runtime limit exceeded");
  std::cout << (c.ok ? "PASS" : "FAIL") << "  " << label << "  (" << std::fixed
            << std::setprecision(2) << secs << "s < " << std::setprecision(0)
            << limit_seconds << "s)\n";
  for (const auto& n : c.notes) std::cout << "      - " << n << "\n";
  if (!c.ok) ++g_failures;
}

const std::vector<VerifyCase>& corpus() {
  static const std::vector<VerifyCase> c = default_corpus();
  return c;
}

GraphAnalytics analytics_of(const VerifyCase& vc) {
  return analyze(commuting_graph(*vc.group, vc.action));
}

}  // namespace

int main() {
  run_criterion(
      "1. Q8 with an order-3 automorphism action: Gamma(G,A) is K3 and Q8 is nilpotent",
      1.0, [](CriterionCheck& c) {
        auto g = catalog_group("Q8");
        ActionGroup a = aut_subgroup_action(g, 3);
        OrbitGraph gr = commuting_graph(*g, a);
        GraphAnalytics an = analyze(gr);
        c.require(gr.vertex_count() == 3, "expected exactly 3 vertices");
        c.require(an.is_complete, "expected a complete graph");
        c.require(gr.edge_list().size() == 3, "expected 3 edges");
        c.require(is_nilpotent(*g), "Q8 must be nilpotent");
      });

  run_criterion(
      "2. D8 with Aut(D8): 3 vertices, one non-edge between the order-4 orbit and the "
      "noncentral involutions",
      1.0, [](CriterionCheck& c) {
        auto g = catalog_group("D8");
        OrbitGraph gr = commuting_graph(*g, full_automorphism_group(g));
        c.require(gr.vertex_count() == 3, "expected exactly 3 vertices");
        c.require(gr.edge_list().size() == 2, "expected exactly one non-edge");
        int v4 = -1, vout = -1;
        Subgroup z = center(*g);
        for (int v = 0; v < gr.vertex_count(); ++v) {
          if (gr.vertices[v].element_order == 4) v4 = v;
          if (gr.vertices[v].element_order == 2 && !z.contains(gr.vertices[v].rep()))
            vout = v;
        }
        c.require(v4 >= 0 && vout >= 0, "missing the order-4 or outer-involution orbit");
        if (v4 >= 0 && vout >= 0)
          c.require(!gr.edge(v4, vout),
                    "the non-edge must join the order-4 and noncentral-involution orbits");
      });

  run_criterion(
      "3. extraspecial 3^(1+2) of exponent 3: some Q8-isomorphic A <= Aut acts transitively "
      "on (G/Z)\\{1} and Gamma(G,A) is complete",
      30.0, [](CriterionCheck& c) {
        auto g = catalog_group("extraspecial-27-exp3");
        ActionGroup full = full_automorphism_group(g);
        c.require(full.size() == 432, "expected |Aut| = 432");
        auto actions = oracles::transitive_q8_actions(g, 1);
        c.require(!actions.empty(), "no transitive Q8-isomorphic subgroup of Aut found");
        if (!actions.empty()) {
          OrbitGraph gr = commuting_graph(*g, actions.front());
          c.require(analyze(gr).is_complete, "Gamma(G,A) must be complete");
        }
      });

  run_criterion(
      "4. A5 with Aut(A5): 3 vertices, no edges; order-60 simple branch and Sylow "
      "transitivity hold",
      60.0, [](CriterionCheck& c) {
        auto g = catalog_group("A5");
        ActionGroup a = full_automorphism_group(g);
        VerifyCase vc = make_case(g, a);
        StructureCache cache;
        CaseContext ctx(vc, cache);
        c.require(ctx.graph.vertex_count() == 3, "expected exactly 3 vertices");
        c.require(ctx.graph.edge_list().empty(), "expected no edges");
        Verdict v = check_thm_4_2(ctx);
        c.require(v.status == VerdictStatus::passed, "Thm4.2 checker must pass");
        c.require(v.witness.value("simpleOrder60", false),
                  "expected the order-60 simple branch");
        c.require(v.witness.value("sylowTransitivity", false),
                  "every Sylow P must have P\\{1} as one N_A(P)-orbit");
      });

  run_criterion(
      "5. F21 with Aut(F21): edgeless 2-vertex graph; Prop4.1 passes; Thm4.2 Frobenius "
      "branch passes",
      5.0, [](CriterionCheck& c) {
        auto g = catalog_group("F21");
        ActionGroup a = full_automorphism_group(g);
        VerifyCase vc = make_case(g, a);
        StructureCache cache;
        CaseContext ctx(vc, cache);
        c.require(ctx.graph.edge_list().empty(), "expected an edgeless graph");
        c.require(ctx.graph.vertex_count() == 2, "expected exactly 2 vertices");
        Verdict p41 = check_prop_4_1(ctx);
        c.require(p41.status == VerdictStatus::passed,
                  "Prop4.1 must pass (Sylow 7 elementary abelian CC-subgroup)");
        Verdict t42 = check_thm_4_2(ctx);
        c.require(t42.status == VerdictStatus::passed && t42.witness.value("frobeniusBranch", false),
                  "Thm4.2 must pass via the Frobenius branch");
        if (!c.ok) {
          std::ostringstream os;
          os << "observed: " << ctx.graph.vertex_count() << " vertices, "
             << ctx.graph.edge_list().size() << " edge(s)";
          c.note(os.str());
          c.note("every automorphism of F21 = <a,b | a^7, b^3, bab^-1 = a^2> maps b to a^j b,");
          c.note("so b and b^2 lie in distinct orbits yet commute: that edge exists for every");
          c.note("A <= Aut(F21), and the expected edgeless 2-vertex graph is unattainable.");
          c.note("(A4 with Aut(A4) realizes the intended configuration; see criterion 5b.)");
        }
      });

  run_criterion(
      "5b. supplement: A4 with Aut(A4) is the edgeless 2-vertex Frobenius configuration",
      5.0, [](CriterionCheck& c) {
        auto g = catalog_group("A4");
        VerifyCase vc = make_case(g, full_automorphism_group(g));
        StructureCache cache;
        CaseContext ctx(vc, cache);
        c.require(ctx.graph.vertex_count() == 2, "expected 2 vertices");
        c.require(ctx.graph.edge_list().empty(), "expected no edges");
        Verdict p41 = check_prop_4_1(ctx);
        c.require(p41.status == VerdictStatus::passed, "Prop4.1 must pass");
        Verdict t42 = check_thm_4_2(ctx);
        c.require(t42.status == VerdictStatus::passed && t42.witness.value("frobeniusBranch", false),
                  "Thm4.2 must pass via the Frobenius branch");
      });

  run_criterion(
      "6. Thm2.2 component formula on S3/S4 and diameter <= 8 for all solvable connected "
      "corpus cases",
      60.0, [](CriterionCheck& c) {
        StructureCache cache;
        auto expect = [&](const std::string& name, const std::string& action, int m,
                          int components) {
          auto g = catalog_group(name);
          ActionGroup a = action == "trivial" ? trivial_action(g) : inner_action(g);
          VerifyCase vc = make_case(g, a);
          CaseContext ctx(vc, cache);
          Verdict v = check_thm_2_2(ctx);
          std::string tag = name + "|" + action;
          c.require(v.status == VerdictStatus::passed, tag + ": Thm2.2 must pass");
          c.require(v.witness.value("m", -1) == m, tag + ": wrong m");
          c.require(v.witness.value("components", -1) == components,
                    tag + ": wrong component count");
        };
        expect("S3", "trivial", 3, 4);
        expect("S3", "inner", 1, 2);
        expect("S4", "inner", 1, 2);

        int connected_solvable = 0;
        for (const auto& vc : corpus()) {
          auto sr = cache.get(vc.group);
          if (!sr->solvable) continue;
          GraphAnalytics an = analytics_of(vc);
          if (an.connected && an.component_count == 1) {
            ++connected_solvable;
            if (an.diameter > 8)
              c.require(false, vc.case_id + ": diameter " + std::to_string(an.diameter));
          }
        }
        c.require(connected_solvable > 100, "expected many connected solvable cases");
      });

  run_criterion(
      "7. oracle equivalence: optimized edges equal the element-pair oracle on every corpus "
      "case",
      120.0, [](CriterionCheck& c) {
        int checked = 0;
        for (const auto& vc : corpus()) {
          if (vc.group->order() > 200) continue;  // corpus maximum is 168
          OrbitGraph fast = commuting_graph(*vc.group, vc.action, false);
          OrbitGraph slow = commuting_graph(*vc.group, vc.action, true);
          if (!(oracles::edge_set(fast) == oracles::edge_set(slow) &&
                oracles::edge_set(fast) ==
                    oracles::commuting_edges_bruteforce(*vc.group, fast.vertices))) {
            c.require(false, vc.case_id + ": edge sets differ");
          }
          ++checked;
        }
        c.note("cases checked: " + std::to_string(checked));
        c.require(checked == static_cast<int>(corpus().size()),
                  "every corpus case must be checked");
      });

  run_criterion(
      "8. property suites: orbit partitions, Lem2.1 chains, quotient coherence, Lem3.1 "
      "inheritance, Sylow exactness",
      300.0, [](CriterionCheck& c) {
        // orbit partition and divisibility, corpus-wide
        for (const auto& vc : corpus()) {
          const Group& g = *vc.group;
          auto orbs = orbits(vc.action);
          IndexSet seen(g.order());
          int total = 0;
          for (const auto& o : orbs) {
            total += o.size();
            if (vc.action.size() % o.size() != 0)
              c.require(false, vc.case_id + ": orbit size does not divide |A|");
            for (Elem m : o.members) {
              if (m == Group::identity || seen.test(m))
                c.require(false, vc.case_id + ": orbits do not partition G\\{1}");
              seen.set(m);
            }
          }
          if (total != g.order() - 1)
            c.require(false, vc.case_id + ": orbits miss elements");
        }

        // Lem2.1 monotonicity over random subaction chains
        std::mt19937 rng(12345);
        std::vector<const VerifyCase*> rich;
        for (const auto& vc : corpus())
          if (vc.action.size() > 2 && vc.group->order() <= 120) rich.push_back(&vc);
        int chains = 0;
        for (int trial = 0; trial < 40 && chains < 25; ++trial) {
          const VerifyCase& vc = *rich[rng() % rich.size()];
          const ActionGroup& a = vc.action;
          auto pick = [&] { return a.at(rng() % a.size()); };
          ActionGroup b = action_from_generators(vc.group, {pick()}, {}, "chainB");
          ActionGroup mid = action_from_generators(vc.group, {b.at(b.size() - 1), pick()},
                                                   {}, "chainC");
          GraphAnalytics an_a = analytics_of(vc);
          GraphAnalytics an_b = analyze(commuting_graph(*vc.group, b));
          GraphAnalytics an_c = analyze(commuting_graph(*vc.group, mid));
          if (!(an_c.component_count <= an_b.component_count &&
                an_a.component_count <= an_c.component_count))
            c.require(false, vc.case_id + ": component monotonicity failed");
          if (an_b.connected) {
            if (!(an_c.connected && an_c.diameter <= an_b.diameter))
              c.require(false, vc.case_id + ": diameter monotonicity failed (B->C)");
          }
          if (an_c.connected) {
            if (!(an_a.connected && an_a.diameter <= an_c.diameter))
              c.require(false, vc.case_id + ": diameter monotonicity failed (C->A)");
          }
          ++chains;
        }
        c.note("subaction chains checked: " + std::to_string(chains));
        c.require(chains >= 20, "need at least 20 random subaction chains");

        // quotient coherence: Gamma(G,B) equals the quotient of Gamma(G,A) by B-orbits
        int coherence_pairs = 0;
        for (const char* n : {"S3", "S4", "Q8", "F21", "D12", "A4", "F20", "Q16"}) {
          auto g = catalog_group(n);
          std::vector<ActionGroup> chain{trivial_action(g), inner_action(g),
                                         full_automorphism_group(g)};
          for (size_t i = 0; i < chain.size(); ++i)
            for (size_t j = i + 1; j < chain.size(); ++j) {
              if (!chain[i].subset_of(chain[j])) continue;
              OrbitGraph ga = commuting_graph(*g, chain[i]);
              OrbitGraph gb = commuting_graph(*g, chain[j]);
              std::vector<std::vector<int>> blocks(gb.vertex_count());
              for (int v = 0; v < ga.vertex_count(); ++v)
                blocks[gb.vertex_of[ga.vertices[v].rep()]].push_back(v);
              if (!(quotient_graph(ga, blocks).adj == gb.adj))
                c.require(false, std::string(n) + ": quotient coherence failed");
              ++coherence_pairs;
            }
        }
        c.note("quotient coherence pairs checked: " + std::to_string(coherence_pairs));
        c.require(coherence_pairs >= 10, "need at least 10 quotient-coherence pairs");

        // Lem3.1 inheritance through A-invariant subgroups and quotients
        int configs = 0;
        for (const char* n : {"S4", "Q8", "D12", "D16", "Q16", "A4", "F21", "D8xC3", "Q8xC3", "S3"}) {
          auto g = catalog_group(n);
          for (ActionGroup a : {inner_action(g), full_automorphism_group(g)}) {
            std::set<std::vector<Elem>> characteristic;
            for (const auto& s : derived_series(*g)) characteristic.insert(s.members);
            for (const auto& s : lower_central_series(*g)) characteristic.insert(s.members);
            characteristic.insert(center(*g).members);
            for (int p : g->primes()) characteristic.insert(p_core(*g, p).members);
            OrbitGraph gamma = commuting_graph(*g, a);
            for (const auto& mem : characteristic) {
              if (mem.size() <= 1 || static_cast<int>(mem.size()) >= g->order()) continue;
              Subgroup h{g.get(), mem};
              IndexSet in_h = make_index_set(g->order(), mem);
              for (const auto& aut : a.elements())
                for (Elem m : mem)
                  if (!in_h.test(aut(m)))
                    c.require(false, std::string(n) + ": characteristic subgroup not A-invariant");
              // (ii) edges between orbits inside H survive in Gamma(H, A|H)
              ActionGroup ah = stabilizer_action_on_subgroup(a, h);
              OrbitGraph gh = commuting_graph(ah.group(), ah);
              for (int u = 0; u < gh.vertex_count(); ++u)
                for (int w = u + 1; w < gh.vertex_count(); ++w) {
                  int pu = gamma.vertex_of[mem[gh.vertices[u].rep()]];
                  int pw = gamma.vertex_of[mem[gh.vertices[w].rep()]];
                  if (gamma.edge(pu, pw) && !gh.edge(u, w))
                    c.require(false, std::string(n) + ": subgroup inheritance failed");
                }
              // (i) edges outside N descend to the quotient
              Quotient q = quotient_group(*g, mem);
              ActionGroup aq = induced_action_on_quotient(a, q, mem);
              OrbitGraph gq = commuting_graph(*q.group, aq);
              IndexSet in_n = make_index_set(g->order(), mem);
              for (auto [u, w] : gamma.edge_list()) {
                Elem x = gamma.vertices[u].rep(), y = gamma.vertices[w].rep();
                if (in_n.test(x) || in_n.test(y)) continue;
                int qu = gq.vertex_of[q.coset_of[x]], qw = gq.vertex_of[q.coset_of[y]];
                if (qu != qw && !gq.edge(qu, qw))
                  c.require(false, std::string(n) + ": quotient inheritance failed");
              }
              ++configs;
            }
          }
        }
        c.note("inheritance configurations checked: " + std::to_string(configs));
        c.require(configs >= 10, "need at least 10 (H, N) configurations");

        // Sylow order exactness, corpus-wide
        std::set<const Group*> seen_groups;
        for (const auto& vc : corpus()) {
          if (!seen_groups.insert(vc.group.get()).second) continue;
          for (int p : vc.group->primes())
            if (sylow_subgroup(*vc.group, p).order() != p_part(vc.group->order(), p))
              c.require(false, vc.group->name() + ": Sylow order mismatch");
        }
        c.note("groups with exact Sylow p-parts: " + std::to_string(seen_groups.size()));
      });

  run_criterion(
      "9. full default verify run: zero failed and zero inconclusive verdicts over the "
      "catalog corpus",
      600.0, [](CriterionCheck& c) {
        VerifyOptions opts;
        StructureCache cache;
        SuiteResult suite = run_suite_detailed(corpus(), opts, cache);
        auto summary = suite.summary();
        std::ostringstream os;
        os << "cases: " << corpus().size() << ", passed: " << summary["passed"]
           << ", failed: " << summary["failed"] << ", inconclusive: " << summary["inconclusive"]
           << ", not applicable: " << summary["notApplicable"];
        c.note(os.str());
        for (const auto& v : suite.flat_verdicts())
          if (v.status == VerdictStatus::failed)
            c.require(false, v.case_id + " " + v.claim_id + ": failed");
          else if (v.status == VerdictStatus::inconclusive)
            c.require(false, v.case_id + " " + v.claim_id + ": inconclusive");
        // contrapositive exercise: every nonsolvable corpus group must yield a
        // concrete Thm3.6 witness pair
        std::set<std::string> nonsolvable_seen;
        for (const auto& cr : suite.cases) {
          if (cr.sr->solvable) continue;
          for (const auto& v : cr.verdicts)
            if (v.claim_id == "Thm3.6") {
              nonsolvable_seen.insert(cr.vc->group->name());
              if (v.applicable() || !v.witness.contains("x"))
                c.require(false, cr.vc->case_id + ": missing Thm3.6 witness pair");
            }
        }
        c.note("nonsolvable groups exercised: " + std::to_string(nonsolvable_seen.size()));
        c.require(nonsolvable_seen.size() >= 3, "expected A5, S5 and PSL(2,7) at least");
      });

  std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED: ")
            << (g_failures == 0 ? "" : std::to_string(g_failures)) << "\n";
  return g_failures == 0 ? 0 : 1;
}
