#pragma once

#include <algorithm>
#include <memory>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "common.hpp"
#include "perm.hpp"

namespace orbigraph {

struct GroupOptions {
  int max_order = 100000;          // closure cap for generated groups
  int table_threshold = 4096;      // precompute the full table when order <= this
  int assoc_exhaustive_limit = 256;  // exhaustive associativity check up to this order
  std::uint64_t seed = 0;          // seed for sampled associativity checks
};

// A finite group on dense element indices 0..order-1, identity pinned to 0.
// Two realizations: permutation groups (elements stored as permutations,
// multiplication by composition, memoized into a full table when small) and
// abstract groups given by a Cayley table.
class Group {
 public:
  static constexpr Elem identity = 0;

  // Closure of permutation generators under composition, BFS discovery order
  // with generators applied in sorted order, so the element indexing is
  // reproducible across runs.
  static Group from_generators(int degree, std::vector<Permutation> gens,
                               const GroupOptions& opts = {}, std::string name = "") {
    if (degree < 1) throw InvalidPermutation("degree must be positive");
    for (const auto& g : gens) {
      if (g.degree() != degree) throw InvalidPermutation("generator degree mismatch");
      if (!g.is_bijection()) throw InvalidPermutation("generator is not a bijection");
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    Group g;
    g.name_ = std::move(name);
    g.perms_.push_back(Permutation::identity(degree));
    g.index_[g.perms_[0]] = 0;
    for (size_t i = 0; i < g.perms_.size(); ++i) {
      for (const auto& gen : gens) {
        Permutation next = g.perms_[i].after(gen);
        if (g.index_.emplace(next, static_cast<Elem>(g.perms_.size())).second) {
          g.perms_.push_back(std::move(next));
          if (static_cast<int>(g.perms_.size()) > opts.max_order)
            throw ClosureOverflow("generated group exceeds max order " +
                                  std::to_string(opts.max_order));
        }
      }
    }
    g.order_ = static_cast<int>(g.perms_.size());
    for (const auto& gen : gens) g.generator_indices_.push_back(g.index_.at(gen));
    std::sort(g.generator_indices_.begin(), g.generator_indices_.end());
    if (g.order_ <= opts.table_threshold) {
      g.table_.resize(static_cast<size_t>(g.order_) * g.order_);
      for (Elem a = 0; a < g.order_; ++a)
        for (Elem b = 0; b < g.order_; ++b)
          g.table_[static_cast<size_t>(a) * g.order_ + b] =
              g.index_.at(g.perms_[a].after(g.perms_[b]));
      g.index_.clear();  // table supersedes the lookup map
    }
    g.finish();
    return g;
  }

  // Validates a Cayley table (Latin square, identity, associativity) and wraps
  // it. Associativity is exhaustive up to opts.assoc_exhaustive_limit and
  // checked on >= 10*n^2 random triples above that. If the identity is not at
  // index 0 the table is relabeled by swapping it there.
  static Group from_table(std::vector<std::vector<int>> table,
                          const GroupOptions& opts = {}, std::string name = "") {
    const int n = static_cast<int>(table.size());
    if (n < 1) throw NotAGroup("empty table");
    for (const auto& row : table)
      if (static_cast<int>(row.size()) != n) throw NotAGroup("table is not square");
    // Latin square: every row and column is a permutation of 0..n-1
    for (int i = 0; i < n; ++i) {
      std::vector<char> row_seen(n, 0), col_seen(n, 0);
      for (int j = 0; j < n; ++j) {
        int r = table[i][j], c = table[j][i];
        if (r < 0 || r >= n || row_seen[r])
          throw NotAGroup("row " + std::to_string(i) + " is not a permutation");
        if (c < 0 || c >= n || col_seen[c])
          throw NotAGroup("column " + std::to_string(i) + " is not a permutation");
        row_seen[r] = col_seen[c] = 1;
      }
    }
    int e = -1;
    for (int cand = 0; cand < n && e < 0; ++cand) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        ok = table[cand][a] == a && table[a][cand] == a;
      if (ok) e = cand;
    }
    if (e < 0) throw NotAGroup("no identity element");
    if (e != 0) {
      // relabel by the transposition 0 <-> e
      auto relab = [&](int x) { return x == 0 ? e : (x == e ? 0 : x); };
      std::vector<std::vector<int>> t(n, std::vector<int>(n));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = relab(table[relab(a)][relab(b)]);
      table = std::move(t);
    }
    auto check = [&](int a, int b, int c) {
      if (table[table[a][b]][c] != table[a][table[b][c]])
        throw NotAGroup("associativity fails", {a, b, c});
    };
    if (n <= opts.assoc_exhaustive_limit) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) check(a, b, c);
    } else {
      std::mt19937_64 rng(opts.seed);
      std::uniform_int_distribution<int> pick(0, n - 1);
      long long samples = 10LL * n * n;
      for (long long s = 0; s < samples; ++s) check(pick(rng), pick(rng), pick(rng));
    }
    Group g;
    g.name_ = std::move(name);
    g.order_ = n;
    g.table_.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) g.table_[static_cast<size_t>(a) * n + b] = table[a][b];
    g.finish();
    return g;
  }

  // Wraps an internally produced table (subgroup or quotient materialization)
  // without re-validating it.
  static Group from_table_trusted(std::vector<int> flat_table, int n, std::string name) {
    Group g;
    g.name_ = std::move(name);
    g.order_ = n;
    g.table_ = std::move(flat_table);
    g.finish();
    return g;
  }

  int order() const { return order_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  Elem mul(Elem a, Elem b) const {
    if (!table_.empty()) return table_[static_cast<size_t>(a) * order_ + b];
    return index_.at(perms_[a].after(perms_[b]));
  }

  Elem inv(Elem a) const { return inverse_[a]; }

  // x^g = g^-1 x g
  Elem conj(Elem x, Elem g) const { return mul(mul(inv(g), x), g); }

  // [x,y] = x^-1 y^-1 x y
  Elem commutator(Elem x, Elem y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }

  int element_order(Elem x) const { return element_order_[x]; }

  bool has_table() const { return !table_.empty(); }
  const std::vector<Permutation>& permutations() const { return perms_; }
  const std::vector<Elem>& generator_indices() const { return generator_indices_; }

  // distinct primes dividing |G|
  std::vector<int> primes() const { return prime_factors(order_); }

 private:
  void finish() {
    inverse_.assign(order_, -1);
    for (Elem a = 0; a < order_; ++a) {
      if (!perms_.empty() && table_.empty()) {
        inverse_[a] = index_.at(perms_[a].inverse());
      } else {
        for (Elem b = 0; b < order_; ++b)
          if (mul(a, b) == identity) {
            inverse_[a] = b;
            break;
          }
      }
      if (inverse_[a] < 0) throw NotAGroup("element without inverse");
    }
    element_order_.assign(order_, 0);
    for (Elem a = 0; a < order_; ++a) {
      int k = 1;
      Elem x = a;
      while (x != identity) {
        x = mul(x, a);
        ++k;
      }
      element_order_[a] = k;
    }
    if (generator_indices_.empty() && order_ > 1) {
      // table-built groups: greedy generating set, lowest index first
      IndexSet have(order_);
      have.set(identity);
      std::vector<Elem> closure_list{identity};
      Elem next = 1;
      while (static_cast<int>(closure_list.size()) < order_) {
        while (have.test(next)) ++next;
        generator_indices_.push_back(next);
        have.set(next);
        closure_list.push_back(next);
        for (size_t i = 0; i < closure_list.size(); ++i) {
          for (Elem gen : generator_indices_) {
            Elem y = mul(closure_list[i], gen);
            if (!have.test(y)) {
              have.set(y);
              closure_list.push_back(y);
            }
          }
        }
      }
    }
  }

  int order_ = 1;
  std::string name_;
  std::vector<Permutation> perms_;                                   // empty for table groups
  std::vector<int> table_;                                           // empty above threshold
  std::unordered_map<Permutation, Elem, PermutationHash> index_;     // only without table
  std::vector<Elem> inverse_;
  std::vector<int> element_order_;
  std::vector<Elem> generator_indices_;
};

using GroupPtr = std::shared_ptr<const Group>;

// A subgroup is a sorted member list inside a parent group.
struct Subgroup {
  const Group* parent = nullptr;
  std::vector<Elem> members;  // sorted, contains the identity

  int order() const { return static_cast<int>(members.size()); }
  bool contains(Elem x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }
  bool is_whole() const { return parent && order() == parent->order(); }
};

}  // namespace orbigraph
