#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "common.hpp"
#include "group.hpp"

namespace orbigraph {

// ---------------------------------------------------------------------------
// Closures and basic subgroups.  All member lists are sorted element indices.

// Subgroup generated by `seeds`: BFS from the identity under right
// multiplication by the seeds (inverses arise as powers, the group is finite).
inline std::vector<Elem> closure_members(const Group& g, const std::vector<Elem>& seeds) {
  IndexSet in(g.order());
  in.set(Group::identity);
  std::vector<Elem> list{Group::identity};
  for (size_t i = 0; i < list.size(); ++i) {
    for (Elem s : seeds) {
      Elem y = g.mul(list[i], s);
      if (!in.test(y)) {
        in.set(y);
        list.push_back(y);
      }
    }
  }
  std::sort(list.begin(), list.end());
  return list;
}

// Bounded closure for backtracking searches: stops early (returning false)
// when the closure exceeds `limit` elements or touches `forbidden`.
inline bool closure_bounded(const Group& g, const std::vector<Elem>& seeds, int limit,
                            const IndexSet* forbidden, std::vector<Elem>& out) {
  IndexSet in(g.order());
  in.set(Group::identity);
  std::vector<Elem> list{Group::identity};
  for (size_t i = 0; i < list.size(); ++i) {
    for (Elem s : seeds) {
      Elem y = g.mul(list[i], s);
      if (!in.test(y)) {
        if (static_cast<int>(list.size()) >= limit) return false;
        if (forbidden && forbidden->test(y)) return false;
        in.set(y);
        list.push_back(y);
      }
    }
  }
  std::sort(list.begin(), list.end());
  out = std::move(list);
  return true;
}

inline Subgroup subgroup_generated(const Group& g, const std::vector<Elem>& seeds) {
  return Subgroup{&g, closure_members(g, seeds)};
}

inline Subgroup trivial_subgroup(const Group& g) {
  return Subgroup{&g, {Group::identity}};
}

inline Subgroup whole_group(const Group& g) {
  std::vector<Elem> all(g.order());
  for (Elem x = 0; x < g.order(); ++x) all[x] = x;
  return Subgroup{&g, std::move(all)};
}

// C_G(x), by exhaustive scan
inline Subgroup centralizer(const Group& g, Elem x) {
  std::vector<Elem> mem;
  for (Elem y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) mem.push_back(y);
  return Subgroup{&g, std::move(mem)};
}

// Z(G): elements commuting with every generator
inline Subgroup center(const Group& g) {
  std::vector<Elem> mem;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem gen : g.generator_indices())
      if (g.mul(x, gen) != g.mul(gen, x)) {
        central = false;
        break;
      }
    if (central) mem.push_back(x);
  }
  return Subgroup{&g, std::move(mem)};
}

// Conjugacy classes as orbits of conjugation by generators (union-find).
// Classes sorted by least member; the identity class {0} comes first.
inline std::vector<std::vector<Elem>> conjugacy_classes(const Group& g) {
  std::vector<int> parent(g.order());
  for (int i = 0; i < g.order(); ++i) parent[i] = i;
  std::vector<int> rank(g.order(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank[a] < rank[b]) std::swap(a, b);
    parent[b] = a;
    if (rank[a] == rank[b]) ++rank[a];
  };
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem gen : g.generator_indices()) unite(x, g.conj(x, gen));
  std::map<int, std::vector<Elem>> buckets;
  for (Elem x = 0; x < g.order(); ++x) buckets[find(x)].push_back(x);
  std::vector<std::vector<Elem>> classes;
  for (auto& [root, mem] : buckets) {
    std::sort(mem.begin(), mem.end());
    classes.push_back(std::move(mem));
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

// smallest subgroup containing `seeds` that is normal in G
inline Subgroup normal_closure(const Group& g, const std::vector<Elem>& seeds) {
  std::vector<Elem> all_conj;
  for (Elem s : seeds)
    for (Elem x = 0; x < g.order(); ++x) all_conj.push_back(g.conj(s, x));
  std::sort(all_conj.begin(), all_conj.end());
  all_conj.erase(std::unique(all_conj.begin(), all_conj.end()), all_conj.end());
  return subgroup_generated(g, all_conj);
}

inline bool is_normal(const Group& g, const std::vector<Elem>& members) {
  IndexSet in = make_index_set(g.order(), members);
  for (Elem m : members)
    for (Elem gen : g.generator_indices())
      if (!in.test(g.conj(m, gen))) return false;
  return true;
}

inline bool is_abelian_subset(const Group& g, const std::vector<Elem>& members) {
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = i + 1; j < members.size(); ++j)
      if (g.mul(members[i], members[j]) != g.mul(members[j], members[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Series, solvability, nilpotency

// [S,T] = closure of all pairwise commutators
inline std::vector<Elem> commutator_members(const Group& g, const std::vector<Elem>& s,
                                            const std::vector<Elem>& t) {
  std::vector<Elem> comms;
  for (Elem a : s)
    for (Elem b : t) comms.push_back(g.commutator(a, b));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return closure_members(g, comms);
}

// G >= G' >= G'' >= ... until stabilization (first entry is G itself)
inline std::vector<Subgroup> derived_series(const Group& g) {
  std::vector<Subgroup> series{whole_group(g)};
  for (;;) {
    const auto& cur = series.back().members;
    auto next = commutator_members(g, cur, cur);
    if (next == cur) break;
    series.push_back(Subgroup{&g, std::move(next)});
    if (series.back().order() == 1) break;
  }
  return series;
}

// G >= [G,G] >= [[G,G],G] >= ... until stabilization
inline std::vector<Subgroup> lower_central_series(const Group& g) {
  std::vector<Subgroup> series{whole_group(g)};
  const auto whole = series.front().members;
  for (;;) {
    const auto& cur = series.back().members;
    auto next = commutator_members(g, cur, whole);
    if (next == cur) break;
    series.push_back(Subgroup{&g, std::move(next)});
    if (series.back().order() == 1) break;
  }
  return series;
}

// solvability of a subgroup given by its members (derived series inside it)
inline bool is_solvable_subset(const Group& g, std::vector<Elem> members) {
  for (;;) {
    auto next = commutator_members(g, members, members);
    if (next.size() == 1) return true;
    if (next == members) return false;
    members = std::move(next);
  }
}

// nilpotency of a subgroup: lower central series inside it
inline bool is_nilpotent_subset(const Group& g, const std::vector<Elem>& members) {
  std::vector<Elem> cur = members;
  for (;;) {
    auto next = commutator_members(g, cur, members);
    if (next.size() == 1) return true;
    if (next == cur) return false;
    cur = std::move(next);
  }
}

inline bool is_solvable(const Group& g) {
  return is_solvable_subset(g, whole_group(g).members);
}

inline bool is_nilpotent(const Group& g) {
  return is_nilpotent_subset(g, whole_group(g).members);
}

// ---------------------------------------------------------------------------
// Sylow subgroups and p-cores

inline std::vector<Elem> normalizer_members(const Group& g, const std::vector<Elem>& members) {
  IndexSet in = make_index_set(g.order(), members);
  std::vector<Elem> norm;
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem m : members)
      if (!in.test(g.conj(m, x))) {
        ok = false;
        break;
      }
    if (ok) norm.push_back(x);
  }
  return norm;
}

// Sylow p-subgroup by normalizer climbing: grow a p-subgroup P by adjoining
// the lowest-index p-element of N_G(P) \ P until |P| is the full p-part.
inline Subgroup sylow_subgroup(const Group& g, int p) {
  const int target = p_part(g.order(), p);
  if (target == 1) return trivial_subgroup(g);
  Elem seed = -1;
  for (Elem x = 1; x < g.order(); ++x)
    if (g.element_order(x) == p) {
      seed = x;
      break;
    }
  if (seed < 0) throw std::logic_error("no element of prime order despite p | |G|");
  std::vector<Elem> pm = closure_members(g, {seed});
  while (static_cast<int>(pm.size()) < target) {
    IndexSet in = make_index_set(g.order(), pm);
    Elem pick = -1;
    for (Elem x : normalizer_members(g, pm)) {
      if (in.test(x)) continue;
      int o = g.element_order(x);
      if (p_part(o, p) == o) {  // p-element
        pick = x;
        break;
      }
    }
    if (pick < 0)
      throw std::logic_error("sylow climbing stalled (internal error)");
    pm.push_back(pick);
    pm = closure_members(g, pm);
  }
  return Subgroup{&g, std::move(pm)};
}

// O_p(G): intersection of all conjugates of one Sylow p-subgroup
inline Subgroup p_core(const Group& g, int p) {
  Subgroup syl = sylow_subgroup(g, p);
  if (syl.order() == 1) return syl;
  IndexSet core = make_index_set(g.order(), syl.members);
  for (Elem x = 0; x < g.order(); ++x) {
    IndexSet conj_set(g.order());
    for (Elem m : syl.members) conj_set.set(g.conj(m, x));
    core &= conj_set;
  }
  return Subgroup{&g, core.to_vector()};
}

// abelian and all nonidentity elements of one prime order
inline bool is_elementary_abelian(const Subgroup& h) {
  if (h.order() == 1) return true;
  const Group& g = *h.parent;
  int p = g.element_order(h.members[1]);
  if (!is_prime(p)) return false;
  for (Elem m : h.members)
    if (m != Group::identity && g.element_order(m) != p) return false;
  return is_abelian_subset(g, h.members);
}

// ---------------------------------------------------------------------------
// Materializations: subgroups and quotients as groups in their own right

// The subgroup as an abstract group; element i of the result is members[i]
// of the parent (members sorted, so index 0 is the identity).
inline GroupPtr subgroup_as_group(const Group& g, const std::vector<Elem>& members,
                                  std::string name = "") {
  const int m = static_cast<int>(members.size());
  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < m; ++i) pos[members[i]] = i;
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int k = pos[g.mul(members[i], members[j])];
      if (k < 0) throw std::logic_error("member set not closed under multiplication");
      table[static_cast<size_t>(i) * m + j] = k;
    }
  if (name.empty()) name = g.name() + ".sub" + std::to_string(m);
  return std::make_shared<Group>(Group::from_table_trusted(std::move(table), m, std::move(name)));
}

struct Quotient {
  GroupPtr group;
  std::vector<int> coset_of;   // parent element -> quotient element index
  std::vector<Elem> rep_of;    // quotient element index -> least coset representative
};

// G/N as a Cayley table on cosets; requires N normal.
inline Quotient quotient_group(const Group& g, const std::vector<Elem>& n_members,
                               std::string name = "") {
  std::vector<Elem> least_rep(g.order(), -1);
  for (Elem x = 0; x < g.order(); ++x) {
    Elem best = x;
    for (Elem m : n_members) best = std::min(best, g.mul(x, m));
    least_rep[x] = best;
  }
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x)
    if (least_rep[x] == x) reps.push_back(x);
  std::sort(reps.begin(), reps.end());
  const int q = static_cast<int>(reps.size());
  std::vector<int> coset_index(g.order(), -1);
  for (int i = 0; i < q; ++i) coset_index[reps[i]] = i;
  std::vector<int> coset_of(g.order());
  for (Elem x = 0; x < g.order(); ++x) coset_of[x] = coset_index[least_rep[x]];
  std::vector<int> table(static_cast<size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[static_cast<size_t>(i) * q + j] = coset_of[g.mul(reps[i], reps[j])];
  if (name.empty())
    name = g.name() + "/N" + std::to_string(n_members.size());
  Quotient out;
  out.group = std::make_shared<Group>(Group::from_table_trusted(std::move(table), q, std::move(name)));
  out.coset_of = std::move(coset_of);
  out.rep_of = std::move(reps);
  return out;
}

// ---------------------------------------------------------------------------
// Normal subgroups and bounded subgroup search

// All normal subgroups, as joins of normal closures of conjugacy classes.
// Every normal subgroup is the join of the class closures it contains, so the
// pairwise-join fixpoint of the class closures is exactly the normal lattice.
// Exponential for groups with many normal subgroups (large elementary abelian
// ones); callers guard with structural shortcuts first.
inline std::vector<Subgroup> normal_subgroups(const Group& g) {
  std::set<std::vector<Elem>> found;
  found.insert({Group::identity});
  for (const auto& cls : conjugacy_classes(g)) {
    if (cls.front() == Group::identity) continue;
    found.insert(normal_closure(g, cls).members);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Elem>> snapshot(found.begin(), found.end());
    for (size_t i = 0; i < snapshot.size() && !grew; ++i)
      for (size_t j = i + 1; j < snapshot.size() && !grew; ++j) {
        std::vector<Elem> seeds = snapshot[i];
        seeds.insert(seeds.end(), snapshot[j].begin(), snapshot[j].end());
        auto join = closure_members(g, seeds);
        if (found.insert(join).second) grew = true;
      }
  }
  std::vector<Subgroup> out;
  for (const auto& mem : found) out.push_back(Subgroup{&g, mem});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });
  return out;
}

// All subgroups of a given order inside `ambient`, intersecting `forbidden`
// trivially.  Backtracking over strictly increasing generator chains; each
// subgroup has a canonical increasing chain, duplicates are removed by member
// set.  Every search node costs one budget unit.
inline std::vector<std::vector<Elem>> find_subgroups_of_order(
    const Group& g, const std::vector<Elem>& ambient, int target,
    const IndexSet& forbidden, SearchBudget& budget) {
  std::set<std::vector<Elem>> found;
  std::vector<Elem> candidates;
  for (Elem x : ambient) {
    if (x == Group::identity || forbidden.test(x)) continue;
    if (target % g.element_order(x) == 0) candidates.push_back(x);
  }
  IndexSet ambient_set = make_index_set(g.order(), ambient);

  // recursive lambda over (current members, index of last generator)
  std::vector<Elem> current{Group::identity};
  auto rec = [&](auto&& self, const std::vector<Elem>& cur, size_t from) -> void {
    for (size_t ci = from; ci < candidates.size(); ++ci) {
      Elem e = candidates[ci];
      if (std::binary_search(cur.begin(), cur.end(), e)) continue;
      budget.spend("subgroup search budget exhausted");
      std::vector<Elem> seeds = cur;
      seeds.push_back(e);
      std::vector<Elem> next;
      if (!closure_bounded(g, seeds, target, &forbidden, next)) continue;
      if (target % static_cast<int>(next.size()) != 0) continue;
      bool inside = true;
      for (Elem m : next)
        if (!ambient_set.test(m)) {
          inside = false;
          break;
        }
      if (!inside) continue;
      if (static_cast<int>(next.size()) == target)
        found.insert(next);
      else
        self(self, next, ci + 1);
    }
  };
  rec(rec, current, 0);
  return {found.begin(), found.end()};
}

// first subgroup of the given order in deterministic search order, or empty
inline std::vector<Elem> find_first_subgroup_of_order(const Group& g, int target,
                                                      SearchBudget& budget) {
  if (target == 1) return {Group::identity};
  if (g.order() % target != 0) return {};
  std::vector<Elem> ambient = whole_group(g).members;
  IndexSet forbidden(g.order());
  std::vector<Elem> candidates;
  for (Elem x : ambient)
    if (x != Group::identity && target % g.element_order(x) == 0) candidates.push_back(x);
  std::vector<Elem> result;
  auto rec = [&](auto&& self, const std::vector<Elem>& cur, size_t from) -> bool {
    for (size_t ci = from; ci < candidates.size(); ++ci) {
      Elem e = candidates[ci];
      if (std::binary_search(cur.begin(), cur.end(), e)) continue;
      budget.spend("subgroup search budget exhausted");
      std::vector<Elem> seeds = cur;
      seeds.push_back(e);
      std::vector<Elem> next;
      if (!closure_bounded(g, seeds, target, &forbidden, next)) continue;
      if (target % static_cast<int>(next.size()) != 0) continue;
      if (static_cast<int>(next.size()) == target) {
        result = next;
        return true;
      }
      if (self(self, next, ci + 1)) return true;
    }
    return false;
  };
  rec(rec, {Group::identity}, 0);
  return result;
}

}  // namespace orbigraph
