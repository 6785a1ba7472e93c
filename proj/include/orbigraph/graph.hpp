#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "action.hpp"
#include "algebra.hpp"
#include "common.hpp"
#include "group.hpp"

namespace orbigraph {

// Dense symmetric bit matrix; the graphs here have at most |G|-1 vertices.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int n) : n_(n), words_((n + 63) / 64), bits_(size_t(n) * words_, 0) {}

  int size() const { return n_; }

  bool get(int i, int j) const {
    return (bits_[size_t(i) * words_ + (j >> 6)] >> (j & 63)) & 1u;
  }

  void set_edge(int i, int j) {
    if (i == j) return;  // simple graph, no loops
    bits_[size_t(i) * words_ + (j >> 6)] |= std::uint64_t(1) << (j & 63);
    bits_[size_t(j) * words_ + (i >> 6)] |= std::uint64_t(1) << (i & 63);
  }

  int degree(int i) const {
    int d = 0;
    for (int w = 0; w < words_; ++w)
      d += __builtin_popcountll(bits_[size_t(i) * words_ + w]);
    return d;
  }

  const std::uint64_t* row(int i) const { return bits_.data() + size_t(i) * words_; }
  int words() const { return words_; }

  bool operator==(const BitMatrix& o) const { return n_ == o.n_ && bits_ == o.bits_; }

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// The commuting graph of A-orbits: vertices are the nontrivial orbits sorted
// by least representative, distinct orbits adjacent iff some members commute.
struct OrbitGraph {
  std::string group_name, action_name;
  std::vector<Orbit> vertices;
  BitMatrix adj;
  std::vector<int> vertex_of;  // element index -> vertex index (identity -> -1)

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  bool edge(int i, int j) const { return adj.get(i, j); }

  std::vector<std::pair<int, int>> edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < vertex_count(); ++i)
      for (int j = i + 1; j < vertex_count(); ++j)
        if (adj.get(i, j)) out.emplace_back(i, j);
    return out;
  }
};

struct SimpleGraph {
  std::vector<std::string> labels;
  BitMatrix adj;

  int vertex_count() const { return static_cast<int>(labels.size()); }
  std::vector<std::pair<int, int>> edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < vertex_count(); ++i)
      for (int j = i + 1; j < vertex_count(); ++j)
        if (adj.get(i, j)) out.emplace_back(i, j);
    return out;
  }
};

struct GraphAnalytics {
  int component_count = 0;
  std::vector<int> component;  // per-vertex component id
  bool connected = true;       // component_count <= 1
  int diameter = 0;            // max over components of the component diameter
  std::vector<int> component_diameters;
  std::vector<int> complete_vertices;  // adjacent to every other vertex
  std::vector<int> isolated_vertices;  // degree 0
  bool is_complete = true;
  std::optional<std::array<int, 3>> triangle;  // lexicographically first witness
};

// Builds Gamma(G,A).  Default path: for one representative r per orbit, every
// nonidentity member of C_G(r) marks an edge to its orbit; this agrees with
// the definition because orbits are A-invariant.  The O(|G|^2) element-pair
// path is kept behind `brute_force` for verification.
inline OrbitGraph commuting_graph(const Group& g, const ActionGroup& a,
                                  bool brute_force = false) {
  OrbitGraph og;
  og.group_name = g.name();
  og.action_name = a.name();
  og.vertices = orbits(a);
  const int nv = og.vertex_count();
  og.adj = BitMatrix(nv);
  og.vertex_of.assign(g.order(), -1);
  for (int v = 0; v < nv; ++v)
    for (Elem m : og.vertices[v].members) og.vertex_of[m] = v;

  if (brute_force) {
    for (Elem x = 1; x < g.order(); ++x)
      for (Elem y = x + 1; y < g.order(); ++y) {
        int vx = og.vertex_of[x], vy = og.vertex_of[y];
        if (vx != vy && g.mul(x, y) == g.mul(y, x)) og.adj.set_edge(vx, vy);
      }
  } else {
    for (int v = 0; v < nv; ++v) {
      Elem r = og.vertices[v].rep();
      for (Elem c = 1; c < g.order(); ++c)
        if (g.mul(r, c) == g.mul(c, r)) {
          int w = og.vertex_of[c];
          if (w != v) og.adj.set_edge(v, w);
        }
    }
  }
  return og;
}

// BFS components, per-component diameters, complete/isolated vertices,
// completeness and the first triangle in lexicographic vertex order.
inline GraphAnalytics analyze_adjacency(const BitMatrix& adj) {
  GraphAnalytics an;
  const int n = adj.size();
  an.component.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    if (an.component[s] >= 0) continue;
    int id = an.component_count++;
    std::vector<int> queue{s};
    an.component[s] = id;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      for (int y = 0; y < n; ++y)
        if (adj.get(x, y) && an.component[y] < 0) {
          an.component[y] = id;
          queue.push_back(y);
        }
    }
  }
  an.connected = an.component_count <= 1;
  an.component_diameters.assign(an.component_count, 0);
  std::vector<int> dist(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::vector<int> queue{s};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      for (int y = 0; y < n; ++y)
        if (adj.get(x, y) && dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
    }
    int& cd = an.component_diameters[an.component[s]];
    for (int y = 0; y < n; ++y)
      if (dist[y] > cd) cd = dist[y];
  }
  for (int d : an.component_diameters) an.diameter = std::max(an.diameter, d);
  for (int v = 0; v < n; ++v) {
    int deg = adj.degree(v);
    if (deg == n - 1 && n >= 1) an.complete_vertices.push_back(v);
    if (deg == 0) an.isolated_vertices.push_back(v);
    if (deg != n - 1) an.is_complete = false;
  }
  for (int i = 0; i < n && !an.triangle; ++i)
    for (int j = i + 1; j < n && !an.triangle; ++j) {
      if (!adj.get(i, j)) continue;
      for (int k = j + 1; k < n; ++k)
        if (adj.get(i, k) && adj.get(j, k)) {
          an.triangle = std::array<int, 3>{i, j, k};
          break;
        }
    }
  return an;
}

inline GraphAnalytics analyze(const OrbitGraph& g) { return analyze_adjacency(g.adj); }
inline GraphAnalytics analyze(const SimpleGraph& g) { return analyze_adjacency(g.adj); }

// Quotient graph modulo a partition of the vertex set: blocks are vertices,
// distinct blocks adjacent iff some cross pair is adjacent.
inline SimpleGraph quotient_adjacency(const BitMatrix& adj,
                                      const std::vector<std::vector<int>>& blocks,
                                      std::vector<std::string> labels = {}) {
  const int n = adj.size();
  std::vector<int> block_of(n, -1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw InvalidPartition("empty block");
    for (int v : blocks[b]) {
      if (v < 0 || v >= n) throw InvalidPartition("vertex out of range");
      if (block_of[v] >= 0) throw InvalidPartition("blocks overlap");
      block_of[v] = static_cast<int>(b);
    }
  }
  for (int v = 0; v < n; ++v)
    if (block_of[v] < 0) throw InvalidPartition("partition does not cover all vertices");
  SimpleGraph out;
  if (labels.empty())
    for (size_t b = 0; b < blocks.size(); ++b)
      labels.push_back("b" + std::to_string(*std::min_element(blocks[b].begin(), blocks[b].end())));
  out.labels = std::move(labels);
  out.adj = BitMatrix(static_cast<int>(blocks.size()));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (adj.get(i, j) && block_of[i] != block_of[j]) out.adj.set_edge(block_of[i], block_of[j]);
  return out;
}

inline SimpleGraph quotient_graph(const OrbitGraph& g, const std::vector<std::vector<int>>& blocks,
                                  std::vector<std::string> labels = {}) {
  return quotient_adjacency(g.adj, blocks, std::move(labels));
}

inline SimpleGraph quotient_graph(const SimpleGraph& g, const std::vector<std::vector<int>>& blocks,
                                  std::vector<std::string> labels = {}) {
  return quotient_adjacency(g.adj, blocks, std::move(labels));
}

// Gruenberg-Kegel (prime) graph: vertices are the primes dividing |G|,
// p ~ q iff G has an element of order divisible by pq (equivalently: of
// order exactly pq, by taking a power).
inline SimpleGraph gk_graph(const Group& g) {
  std::vector<int> ps = g.primes();
  SimpleGraph out;
  for (int p : ps) out.labels.push_back(std::to_string(p));
  out.adj = BitMatrix(static_cast<int>(ps.size()));
  auto index_of = [&](int p) {
    return static_cast<int>(std::lower_bound(ps.begin(), ps.end(), p) - ps.begin());
  };
  for (Elem x = 1; x < g.order(); ++x) {
    auto fs = prime_factors(g.element_order(x));
    for (size_t i = 0; i < fs.size(); ++i)
      for (size_t j = i + 1; j < fs.size(); ++j)
        out.adj.set_edge(index_of(fs[i]), index_of(fs[j]));
  }
  return out;
}

// induced subgraph on orbits of prime-order elements
inline OrbitGraph prime_order_subgraph(const OrbitGraph& g) {
  OrbitGraph out;
  out.group_name = g.group_name;
  out.action_name = g.action_name + "|prime-order";
  std::vector<int> keep;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (is_prime(g.vertices[v].element_order)) keep.push_back(v);
  out.adj = BitMatrix(static_cast<int>(keep.size()));
  out.vertex_of.assign(g.vertex_of.size(), -1);
  for (size_t i = 0; i < keep.size(); ++i) {
    out.vertices.push_back(g.vertices[keep[i]]);
    for (Elem m : g.vertices[keep[i]].members) out.vertex_of[m] = static_cast<int>(i);
    for (size_t j = i + 1; j < keep.size(); ++j)
      if (g.adj.get(keep[i], keep[j])) out.adj.set_edge(static_cast<int>(i), static_cast<int>(j));
  }
  return out;
}

// Checks that the quotient of the prime-order subgraph of Gamma(G,A) modulo
// the blocks V_p (orbits of order-p elements) is the prime graph of G.
inline bool gk_via_quotient_check(const Group& g, const OrbitGraph& gamma) {
  OrbitGraph pos = prime_order_subgraph(gamma);
  std::map<int, std::vector<int>> by_prime;
  for (int v = 0; v < pos.vertex_count(); ++v)
    by_prime[pos.vertices[v].element_order].push_back(v);
  std::vector<int> block_primes;
  std::vector<std::vector<int>> blocks;
  std::vector<std::string> labels;
  for (auto& [p, vs] : by_prime) {
    block_primes.push_back(p);
    blocks.push_back(vs);
    labels.push_back(std::to_string(p));
  }
  SimpleGraph quo = quotient_adjacency(pos.adj, blocks, labels);
  SimpleGraph gk = gk_graph(g);
  if (quo.labels != gk.labels) return false;  // same primes (Cauchy guarantees coverage)
  return quo.adj == gk.adj;
}

}  // namespace orbigraph
