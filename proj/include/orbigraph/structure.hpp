#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "algebra.hpp"
#include "common.hpp"
#include "group.hpp"

namespace orbigraph {

// G = KL with K normal and L acting semiregularly on K.
struct FrobeniusData {
  Subgroup kernel;
  std::vector<Subgroup> complements;  // all complements, not one per class
  bool one_per_conj_class = false;    // true would mean a representative list
};

// G = KLM with K and KL normal, KL Frobenius with kernel K, and G/K
// Frobenius with kernel KL/K.
struct TwoFrobeniusData {
  Subgroup k;
  Subgroup kl;
  FrobeniusData lower_frobenius;       // complements of K inside KL
  bool upper_frobenius_verified = false;
};

enum class DetectStatus { found, none, budget_exceeded };

// every nonidentity k in `kernel` has C_ambient(k) inside the kernel
inline bool frobenius_kernel_criterion(const Group& g, const std::vector<Elem>& ambient,
                                       const std::vector<Elem>& kernel) {
  IndexSet in_k = make_index_set(g.order(), kernel);
  for (Elem k : kernel) {
    if (k == Group::identity) continue;
    for (Elem x : ambient)
      if (!in_k.test(x) && g.mul(k, x) == g.mul(x, k)) return false;
  }
  return true;
}

// C_K(l) = 1 for every nonidentity l in L (automatic once the kernel
// criterion holds, kept as an explicit filter)
inline bool acts_semiregularly(const Group& g, const std::vector<Elem>& kernel,
                               const std::vector<Elem>& complement) {
  for (Elem l : complement) {
    if (l == Group::identity) continue;
    for (Elem k : kernel) {
      if (k == Group::identity) continue;
      if (g.mul(l, k) == g.mul(k, l)) return false;
    }
  }
  return true;
}

namespace detail {

// Frobenius search restricted to an ambient subgroup (the whole group, or KL
// for the lower half of a 2-Frobenius chain).  `normals` must be normal
// subgroups of the ambient.
inline std::optional<FrobeniusData> frobenius_in(const Group& g,
                                                 const std::vector<Elem>& ambient,
                                                 const std::vector<Subgroup>& normals,
                                                 SearchBudget& budget) {
  const int amb_order = static_cast<int>(ambient.size());
  for (const Subgroup& k : normals) {
    if (k.order() <= 1 || k.order() >= amb_order) continue;
    if (amb_order % k.order() != 0) continue;
    if (!frobenius_kernel_criterion(g, ambient, k.members)) continue;
    IndexSet forbidden = make_index_set(g.order(), k.members);
    forbidden.reset(Group::identity);
    int m = amb_order / k.order();
    auto complements = find_subgroups_of_order(g, ambient, m, forbidden, budget);
    FrobeniusData data;
    data.kernel = k;
    for (auto& mem : complements) {
      if (!acts_semiregularly(g, k.members, mem)) continue;
      data.complements.push_back(Subgroup{&g, std::move(mem)});
    }
    if (!data.complements.empty()) return data;
  }
  return std::nullopt;
}

}  // namespace detail

// Nontrivial proper normal K with C_G(k) <= K for all nonidentity k in K,
// plus all complements.  A group with nontrivial center has no such K
// (Z(G) <= C_G(k) forces Z(G) <= K, and a central element of K would have
// C_G = G), which also keeps the normal-lattice enumeration off the large
// abelian groups.
inline std::optional<FrobeniusData> frobenius_decomposition(const Group& g,
                                                            SearchBudget& budget) {
  if (g.order() < 6) return std::nullopt;  // smallest Frobenius group is S3
  if (center(g).order() > 1) return std::nullopt;
  auto normals = normal_subgroups(g);
  return detail::frobenius_in(g, whole_group(g).members, normals, budget);
}

inline std::optional<TwoFrobeniusData> two_frobenius_decomposition(const Group& g,
                                                                   SearchBudget& budget) {
  if (g.order() < 12) return std::nullopt;  // smallest is A4
  if (center(g).order() > 1) return std::nullopt;
  auto normals = normal_subgroups(g);
  for (const Subgroup& k : normals) {
    if (k.order() <= 1 || k.order() >= g.order()) continue;
    IndexSet in_k = make_index_set(g.order(), k.members);
    for (const Subgroup& kl : normals) {
      if (kl.order() <= k.order() || kl.order() >= g.order()) continue;
      if (kl.order() % k.order() != 0) continue;
      bool contains_k = true;
      for (Elem m : k.members)
        if (!kl.contains(m)) {
          contains_k = false;
          break;
        }
      if (!contains_k) continue;
      if (!frobenius_kernel_criterion(g, kl.members, k.members)) continue;
      // upper half: G/K Frobenius with kernel KL/K
      Quotient q = quotient_group(g, k.members);
      std::vector<Elem> kl_bar;
      for (Elem m : kl.members) kl_bar.push_back(q.coset_of[m]);
      std::sort(kl_bar.begin(), kl_bar.end());
      kl_bar.erase(std::unique(kl_bar.begin(), kl_bar.end()), kl_bar.end());
      std::vector<Elem> q_all = whole_group(*q.group).members;
      if (!frobenius_kernel_criterion(*q.group, q_all, kl_bar)) continue;
      // lower complements: complements of K inside KL
      IndexSet forbidden = in_k;
      forbidden.reset(Group::identity);
      int m = kl.order() / k.order();
      auto complements = find_subgroups_of_order(g, kl.members, m, forbidden, budget);
      TwoFrobeniusData data;
      data.k = k;
      data.kl = kl;
      data.lower_frobenius.kernel = k;
      for (auto& mem : complements) {
        if (!acts_semiregularly(g, k.members, mem)) continue;
        data.lower_frobenius.complements.push_back(Subgroup{&g, std::move(mem)});
      }
      data.upper_frobenius_verified = true;
      if (!data.lower_frobenius.complements.empty()) return data;
    }
  }
  return std::nullopt;
}

// every element has prime power order
inline bool is_cp_group(const Group& g) {
  for (Elem x = 1; x < g.order(); ++x)
    if (!is_prime_power(g.element_order(x))) return false;
  return true;
}

// C_G(x) = H for every nonidentity x in H
inline bool is_cc_subgroup(const Group& g, const Subgroup& h) {
  for (Elem x : h.members) {
    if (x == Group::identity) continue;
    if (centralizer(g, x).members != h.members) return false;
  }
  return true;
}

// every element order is 1, p or p^2 for some prime p
inline bool orders_divide_p_squared(const Group& g) {
  for (Elem x = 1; x < g.order(); ++x) {
    int o = g.element_order(x);
    int p = 0;
    if (!is_prime_power(o, &p)) return false;
    if (o != p && o != p * p) return false;
  }
  return true;
}

// Aggregated structural facts about one group.  Budget exhaustion in the
// Frobenius searches is recorded, never silently reported as "none".
struct StructureReport {
  bool nilpotent = false;
  bool solvable = false;
  bool cp_group = false;
  bool orders_divide_p2 = false;
  int center_order = 1;
  std::optional<FrobeniusData> frobenius;
  DetectStatus frobenius_status = DetectStatus::none;
  std::optional<TwoFrobeniusData> two_frobenius;
  DetectStatus two_frobenius_status = DetectStatus::none;
  std::map<int, Subgroup> sylow;    // prime -> Sylow p-subgroup
  std::map<int, Subgroup> p_cores;  // prime -> O_p(G)
};

inline StructureReport structure_report(const Group& g, const SearchBudget& budget_template = {}) {
  StructureReport r;
  r.nilpotent = is_nilpotent(g);
  r.solvable = is_solvable(g);
  r.cp_group = is_cp_group(g);
  r.orders_divide_p2 = orders_divide_p_squared(g);
  r.center_order = center(g).order();
  for (int p : g.primes()) {
    r.sylow.emplace(p, sylow_subgroup(g, p));
    r.p_cores.emplace(p, p_core(g, p));
  }
  try {
    SearchBudget budget = budget_template;
    r.frobenius = frobenius_decomposition(g, budget);
    r.frobenius_status = r.frobenius ? DetectStatus::found : DetectStatus::none;
  } catch (const SearchBudgetExceeded&) {
    r.frobenius_status = DetectStatus::budget_exceeded;
  }
  try {
    SearchBudget budget = budget_template;
    r.two_frobenius = two_frobenius_decomposition(g, budget);
    r.two_frobenius_status = r.two_frobenius ? DetectStatus::found : DetectStatus::none;
  } catch (const SearchBudgetExceeded&) {
    r.two_frobenius_status = DetectStatus::budget_exceeded;
  }
  return r;
}

// Per-group memoized reports, safe for concurrent case workers.
class StructureCache {
 public:
  explicit StructureCache(SearchBudget budget_template = {})
      : budget_template_(budget_template) {}

  std::shared_ptr<const StructureReport> get(const GroupPtr& g) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(g.get());
    if (it != cache_.end()) return it->second;
    auto report = std::make_shared<StructureReport>(structure_report(*g, budget_template_));
    cache_.emplace(g.get(), report);
    return report;
  }

 private:
  std::mutex mu_;
  SearchBudget budget_template_;
  std::unordered_map<const Group*, std::shared_ptr<const StructureReport>> cache_;
};

}  // namespace orbigraph
