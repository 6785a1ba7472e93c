#pragma once

#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "algebra.hpp"
#include "common.hpp"
#include "group.hpp"

namespace orbigraph {

// A bijective multiplication-preserving self-map of a group, stored as the
// full image array on element indices.  map[0] == 0 always.
struct Automorphism {
  std::vector<Elem> map;

  Automorphism() = default;
  explicit Automorphism(std::vector<Elem> m) : map(std::move(m)) {}

  Elem operator()(Elem x) const { return map[x]; }
  int size() const { return static_cast<int>(map.size()); }

  static Automorphism identity(int n) {
    std::vector<Elem> m(n);
    for (int i = 0; i < n; ++i) m[i] = i;
    return Automorphism(std::move(m));
  }

  // (a.after(b))(x) = a(b(x))
  Automorphism after(const Automorphism& b) const {
    std::vector<Elem> m(map.size());
    for (size_t i = 0; i < map.size(); ++i) m[i] = map[b.map[i]];
    return Automorphism(std::move(m));
  }

  Automorphism inverse() const {
    std::vector<Elem> m(map.size());
    for (size_t i = 0; i < map.size(); ++i) m[map[i]] = i;
    return Automorphism(std::move(m));
  }

  bool operator==(const Automorphism& o) const { return map == o.map; }
  bool operator<(const Automorphism& o) const { return map < o.map; }
};

// Throws NotAnAutomorphism with a witness pair on failure.  Exhaustive pair
// check for small groups; above the limit a generator-based check suffices
// (a total map satisfying map(xg) = map(x)map(g) for all x and generators g
// is multiplicative on the whole group).
inline void validate_automorphism(const Group& g, const Automorphism& a,
                                  int exhaustive_limit = 256) {
  const int n = g.order();
  if (a.size() != n) throw NotAnAutomorphism("map length differs from group order");
  std::vector<char> seen(n, 0);
  for (Elem x : a.map) {
    if (x < 0 || x >= n || seen[x]) throw NotAnAutomorphism("map is not a bijection");
    seen[x] = 1;
  }
  if (a.map[Group::identity] != Group::identity)
    throw NotAnAutomorphism("map does not fix the identity");
  if (n <= exhaustive_limit) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (a.map[g.mul(x, y)] != g.mul(a.map[x], a.map[y]))
          throw NotAnAutomorphism("map is not multiplicative", x, y);
  } else {
    for (Elem x = 0; x < n; ++x)
      for (Elem gen : g.generator_indices())
        if (a.map[g.mul(x, gen)] != g.mul(a.map[x], a.map[gen]))
          throw NotAnAutomorphism("map is not multiplicative", x, gen);
  }
}

struct ActionOptions {
  int aut_cap = 512;    // refuse full Aut(G) computation above this group order
  int max_aut = 50000;  // abort when more automorphisms than this materialize
};

// A finite closed set of automorphisms acting on a fixed group.  Elements are
// kept sorted lexicographically by image array (the identity map sorts
// first), so indices are canonical.  Equal maps are deduplicated, which
// quotients out the kernel of the action automatically.
class ActionGroup {
 public:
  ActionGroup() = default;
  ActionGroup(GroupPtr group, std::vector<Automorphism> elements, std::string name)
      : group_(std::move(group)), elements_(std::move(elements)), name_(std::move(name)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    compute_generators();
  }

  const Group& group() const { return *group_; }
  GroupPtr group_ptr() const { return group_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<Automorphism>& elements() const { return elements_; }
  const Automorphism& at(int i) const { return elements_[i]; }
  const std::vector<int>& generators() const { return generators_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  int find(const Automorphism& a) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), a);
    if (it == elements_.end() || !(*it == a)) return -1;
    return static_cast<int>(it - elements_.begin());
  }

  // subset as sets of maps (kernel already deduplicated on both sides)
  bool subset_of(const ActionGroup& other) const {
    return std::includes(other.elements_.begin(), other.elements_.end(),
                         elements_.begin(), elements_.end());
  }

 private:
  void compute_generators() {
    generators_.clear();
    if (elements_.empty()) return;
    const int n = elements_[0].size();
    // greedy: extend by the lowest-index map outside the closure so far
    std::vector<char> have(elements_.size(), 0);
    Automorphism id = Automorphism::identity(n);
    int id_idx = find(id);
    have[id_idx] = 1;
    int have_count = 1;
    std::vector<int> closure_list{id_idx};
    while (have_count < size()) {
      int next = -1;
      for (int i = 0; i < size(); ++i)
        if (!have[i]) {
          next = i;
          break;
        }
      generators_.push_back(next);
      have[next] = 1;
      ++have_count;
      closure_list.push_back(next);
      for (size_t i = 0; i < closure_list.size(); ++i) {
        for (int gidx : generators_) {
          int y = find(elements_[closure_list[i]].after(elements_[gidx]));
          if (y < 0) throw std::logic_error("ActionGroup not closed under composition");
          if (!have[y]) {
            have[y] = 1;
            ++have_count;
            closure_list.push_back(y);
          }
        }
      }
    }
    if (generators_.empty()) generators_.push_back(id_idx);
  }

  GroupPtr group_;
  std::vector<Automorphism> elements_;
  std::vector<int> generators_;
  std::string name_;
};

// An orbit of the action on G \ {1}: sorted members, least one represents.
struct Orbit {
  std::vector<Elem> members;
  int element_order = 0;  // all members share it

  Elem rep() const { return members.front(); }
  int size() const { return static_cast<int>(members.size()); }
};

inline ActionGroup trivial_action(GroupPtr g) {
  return ActionGroup(g, {Automorphism::identity(g->order())}, "trivial");
}

// {conjugation by g : g in G}, deduplicated, so the size is |G/Z(G)|
inline ActionGroup inner_action(GroupPtr g) {
  std::vector<Automorphism> maps;
  maps.reserve(g->order());
  for (Elem x = 0; x < g->order(); ++x) {
    std::vector<Elem> m(g->order());
    for (Elem y = 0; y < g->order(); ++y) m[y] = g->conj(y, x);
    maps.emplace_back(std::move(m));
  }
  return ActionGroup(g, std::move(maps), "inner");
}

// closure of validated generator automorphisms under composition
inline ActionGroup action_from_generators(GroupPtr g, const std::vector<Automorphism>& gens,
                                          const ActionOptions& opts = {},
                                          std::string name = "generators") {
  for (const auto& a : gens) validate_automorphism(*g, a);
  std::set<Automorphism> seen;
  std::vector<Automorphism> list{Automorphism::identity(g->order())};
  seen.insert(list[0]);
  for (const auto& a : gens)
    if (seen.insert(a).second) list.push_back(a);
  for (size_t i = 0; i < list.size(); ++i) {
    for (const auto& a : gens) {
      Automorphism next = list[i].after(a);
      if (seen.insert(next).second) {
        list.push_back(std::move(next));
        if (static_cast<int>(list.size()) > opts.max_aut)
          throw ClosureOverflow("action closure exceeds " + std::to_string(opts.max_aut));
      }
    }
  }
  return ActionGroup(g, std::move(list), std::move(name));
}

namespace detail {

// Backtracking enumeration of Aut(G).  Images of a greedy generating chain
// are chosen among elements with an identical invariant signature
// (element order, conjugacy class size, class sizes of all proper powers);
// each choice is extended multiplicatively over the generated subgroup with
// consistency and injectivity checks, which prunes bad branches early.
class AutSearch {
 public:
  AutSearch(const Group& g, int max_aut) : g_(g), max_aut_(max_aut) {
    const int n = g.order();
    auto classes = conjugacy_classes(g);
    std::vector<int> class_size(n, 0);
    for (const auto& cls : classes)
      for (Elem x : cls) class_size[x] = static_cast<int>(cls.size());
    sig_.resize(n);
    for (Elem x = 0; x < n; ++x) {
      auto& s = sig_[x];
      s.push_back(g.element_order(x));
      s.push_back(class_size[x]);
      Elem pw = x;
      for (int k = 2; k < g.element_order(x); ++k) {
        pw = g.mul(pw, x);
        s.push_back(class_size[pw]);
      }
    }
    // greedy generating chain, lowest index first
    IndexSet have(n);
    have.set(Group::identity);
    std::vector<Elem> closure_list{Group::identity};
    Elem next = 1;
    while (static_cast<int>(closure_list.size()) < n) {
      while (have.test(next)) ++next;
      gens_.push_back(next);
      have.set(next);
      closure_list.push_back(next);
      for (size_t i = 0; i < closure_list.size(); ++i)
        for (Elem gen : gens_) {
          Elem y = g.mul(closure_list[i], gen);
          if (!have.test(y)) {
            have.set(y);
            closure_list.push_back(y);
          }
        }
    }
    img_.assign(n, -1);
    used_.assign(n, 0);
    img_[Group::identity] = Group::identity;
    used_[Group::identity] = 1;
    defined_.push_back(Group::identity);
  }

  std::vector<Automorphism> run() {
    if (g_.order() == 1) return {Automorphism::identity(1)};
    descend(0);
    return std::move(found_);
  }

 private:
  void descend(size_t level) {
    if (level == gens_.size()) {
      found_.emplace_back(img_);
      if (static_cast<int>(found_.size()) > max_aut_)
        throw AutCapExceeded("automorphism count exceeds " + std::to_string(max_aut_));
      return;
    }
    Elem gen = gens_[level];
    const size_t mark = defined_.size();
    for (Elem t = 0; t < g_.order(); ++t) {
      if (used_[t] || sig_[t] != sig_[gen]) continue;
      if (extend(level, gen, t))
        descend(level + 1);
      rollback(mark);
    }
  }

  // define img[gen] = t, then close under right multiplication by the active
  // generators; returns false on any inconsistency (state still needs rollback)
  bool extend(size_t level, Elem gen, Elem t) {
    const size_t old_size = defined_.size();
    img_[gen] = t;
    used_[t] = 1;
    defined_.push_back(gen);
    for (size_t i = 0; i < defined_.size(); ++i) {
      Elem x = defined_[i];
      for (size_t li = 0; li <= level; ++li) {
        Elem h = gens_[li];
        if (i < old_size && h != gen) continue;  // old pairs already verified
        Elem y = g_.mul(x, h);
        Elem iy = g_.mul(img_[x], img_[h]);
        if (img_[y] < 0) {
          if (used_[iy]) return false;
          img_[y] = iy;
          used_[iy] = 1;
          defined_.push_back(y);
        } else if (img_[y] != iy) {
          return false;
        }
      }
    }
    return true;
  }

  void rollback(size_t mark) {
    while (defined_.size() > mark) {
      Elem x = defined_.back();
      defined_.pop_back();
      used_[img_[x]] = 0;
      img_[x] = -1;
    }
  }

  const Group& g_;
  int max_aut_;
  std::vector<std::vector<int>> sig_;
  std::vector<Elem> gens_;
  std::vector<Elem> img_;
  std::vector<char> used_;
  std::vector<Elem> defined_;
  std::vector<Automorphism> found_;
};

}  // namespace detail

// Full Aut(G) for small groups.  Throws AutCapExceeded when |G| exceeds the
// cap or the automorphism count exceeds max_aut (elementary abelian groups
// can have an Aut far beyond desk scale even at tiny |G|).
inline ActionGroup full_automorphism_group(GroupPtr g, const ActionOptions& opts = {}) {
  if (g->order() > opts.aut_cap)
    throw AutCapExceeded("group order " + std::to_string(g->order()) +
                         " exceeds aut cap " + std::to_string(opts.aut_cap));
  detail::AutSearch search(*g, opts.max_aut);
  return ActionGroup(g, search.run(), "full-aut");
}

// A-orbits on G \ {1}: union-find over generator applications, output sorted
// by least representative.
inline std::vector<Orbit> orbits(const ActionGroup& a) {
  const Group& g = a.group();
  const int n = g.order();
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (Elem x = 1; x < n; ++x)
    for (int gi : a.generators()) {
      int rx = find(x), ry = find(a.at(gi)(x));
      if (rx != ry) parent[std::max(rx, ry)] = std::min(rx, ry);
    }
  std::map<int, std::vector<Elem>> buckets;
  for (Elem x = 1; x < n; ++x) buckets[find(x)].push_back(x);
  std::vector<Orbit> out;
  for (auto& [root, mem] : buckets) {
    Orbit o;
    std::sort(mem.begin(), mem.end());
    o.element_order = g.element_order(mem.front());
    o.members = std::move(mem);
    out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end(),
            [](const Orbit& x, const Orbit& y) { return x.rep() < y.rep(); });
  return out;
}

// N_A(H) = {a in A : H^a = H}, restricted to H and re-indexed: the result
// acts on subgroup_as_group(H), whose element i is H.members[i].
inline ActionGroup stabilizer_action_on_subgroup(const ActionGroup& a, const Subgroup& h) {
  const Group& g = a.group();
  GroupPtr sub = subgroup_as_group(g, h.members);
  std::vector<int> pos(g.order(), -1);
  for (size_t i = 0; i < h.members.size(); ++i) pos[h.members[i]] = static_cast<int>(i);
  IndexSet in_h = make_index_set(g.order(), h.members);
  std::vector<Automorphism> maps;
  for (const auto& aut : a.elements()) {
    bool stable = true;
    for (Elem m : h.members)
      if (!in_h.test(aut(m))) {
        stable = false;
        break;
      }
    if (!stable) continue;
    std::vector<Elem> rm(h.members.size());
    for (size_t i = 0; i < h.members.size(); ++i) rm[i] = pos[aut(h.members[i])];
    maps.emplace_back(std::move(rm));
  }
  return ActionGroup(sub, std::move(maps), a.name() + "|sub" + std::to_string(h.order()));
}

// Automorphisms of G/N induced by an action that leaves N invariant.
inline ActionGroup induced_action_on_quotient(const ActionGroup& a, const Quotient& q,
                                              const std::vector<Elem>& n_members) {
  const Group& g = a.group();
  IndexSet in_n = make_index_set(g.order(), n_members);
  const int nq = q.group->order();
  std::vector<Automorphism> maps;
  for (const auto& aut : a.elements()) {
    bool invariant = true;
    for (Elem m : n_members)
      if (!in_n.test(aut(m))) {
        invariant = false;
        break;
      }
    if (!invariant)
      throw NotAnAutomorphism("action does not leave the normal subgroup invariant");
    std::vector<Elem> m(nq);
    for (int c = 0; c < nq; ++c) m[c] = q.coset_of[aut(q.rep_of[c])];
    maps.emplace_back(std::move(m));
  }
  return ActionGroup(q.group, std::move(maps), a.name() + "|quo");
}

// The action materialized as an abstract group (elements = maps, composition
// as multiplication).  Element i of the result is a.elements()[i].
inline GroupPtr action_as_group(const ActionGroup& a, int table_cap = 5000) {
  const int m = a.size();
  if (m > table_cap)
    throw AutCapExceeded("action too large to materialize as a group: " + std::to_string(m));
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int k = a.find(a.at(i).after(a.at(j)));
      if (k < 0) throw std::logic_error("action not closed under composition");
      table[static_cast<size_t>(i) * m + j] = k;
    }
  // identity map sorts first, so index 0 is already the identity
  return std::make_shared<Group>(
      Group::from_table_trusted(std::move(table), m, a.name() + ".grp"));
}

// First subgroup of Aut(G) of the given order in deterministic enumeration
// (elements ordered lexicographically by map), returned as an action on G.
inline ActionGroup aut_subgroup_action(GroupPtr g, int subgroup_order,
                                       const ActionOptions& opts = {}) {
  ActionGroup full = full_automorphism_group(g, opts);
  GroupPtr agrp = action_as_group(full);
  SearchBudget budget;
  std::vector<Elem> members = find_first_subgroup_of_order(*agrp, subgroup_order, budget);
  if (members.empty())
    throw Error("Aut(G) has no subgroup of order " + std::to_string(subgroup_order));
  std::vector<Automorphism> maps;
  for (Elem idx : members) maps.push_back(full.at(idx));
  return ActionGroup(g, std::move(maps), "aut-subgroup:" + std::to_string(subgroup_order));
}

}  // namespace orbigraph
