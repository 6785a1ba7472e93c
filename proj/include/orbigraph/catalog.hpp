#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "common.hpp"
#include "group.hpp"
#include "perm.hpp"

namespace orbigraph {

struct CatalogEntry {
  std::string name;
  int order;
  int degree;
  std::vector<Permutation> generators;
};

namespace detail {

// left-multiplication permutations of selected elements, from a Cayley table
inline std::vector<Permutation> regular_generators(const std::vector<std::vector<int>>& table,
                                                   const std::vector<int>& gens) {
  std::vector<Permutation> out;
  const int n = static_cast<int>(table.size());
  for (int gidx : gens) {
    std::vector<int> im(n);
    for (int x = 0; x < n; ++x) im[x] = table[gidx][x];
    out.emplace_back(std::move(im));
  }
  return out;
}

// quaternion group of order 8 on {1,-1,i,-i,j,-j,k,-k}
inline std::vector<std::vector<int>> quaternion8_table() {
  // element = axis (0:1, 1:i, 2:j, 3:k) + 4 * sign
  auto idx = [](int axis, int sign) { return axis + (sign < 0 ? 4 : 0); };
  // axis products with sign: 1*x=x, i*i=-1, i*j=k, j*k=i, k*i=j, anti-commuting
  static const int prod_axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int prod_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ax = a % 4, bx = b % 4;
      int sa = a < 4 ? 1 : -1, sb = b < 4 ? 1 : -1;
      t[a][b] = idx(prod_axis[ax][bx], sa * sb * prod_sign[ax][bx]);
    }
  return t;
}

// generalized quaternion of order 16: <a,b | a^8=1, b^2=a^4, a^b=a^-1>,
// element (i,j) = a^i b^j encoded as i + 8j
inline std::vector<std::vector<int>> quaternion16_table() {
  auto idx = [](int i, int j) { return ((i % 8) + 8) % 8 + 8 * j; };
  std::vector<std::vector<int>> t(16, std::vector<int>(16));
  for (int i1 = 0; i1 < 8; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < 8; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i, j;
          if (j1 == 0) {
            i = i1 + i2;
            j = j2;
          } else {
            i = i1 - i2;
            j = 1 + j2;
            if (j == 2) {
              i += 4;  // b^2 = a^4
              j = 0;
            }
          }
          t[idx(i1, j1)][idx(i2, j2)] = idx(i, j);
        }
  return t;
}

// extraspecial group of order 27 and exponent 3 (Heisenberg group over F_3):
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab'), element encoded as 9a+3b+c
inline std::vector<std::vector<int>> heisenberg3_table() {
  auto idx = [](int a, int b, int c) { return 9 * a + 3 * b + c; };
  std::vector<std::vector<int>> t(27, std::vector<int>(27));
  for (int a1 = 0; a1 < 3; ++a1)
    for (int b1 = 0; b1 < 3; ++b1)
      for (int c1 = 0; c1 < 3; ++c1)
        for (int a2 = 0; a2 < 3; ++a2)
          for (int b2 = 0; b2 < 3; ++b2)
            for (int c2 = 0; c2 < 3; ++c2)
              t[idx(a1, b1, c1)][idx(a2, b2, c2)] =
                  idx((a1 + a2) % 3, (b1 + b2) % 3, (c1 + c2 + a1 * b2) % 3);
  return t;
}

inline Permutation cycle_perm(int degree, std::vector<int> cycle) {
  return permutation_from_cycles(degree, {std::move(cycle)});
}

inline Permutation affine_perm(int p, int mult, int shift) {
  std::vector<int> im(p);
  for (int x = 0; x < p; ++x) im[x] = (mult * x + shift) % p;
  return Permutation(std::move(im));
}

// x -> x+1 and x -> g*x on Z/p for a generator g of (Z/p)^x gives AGL(1,p)
inline std::vector<Permutation> agl1_generators(int p, int primitive_root) {
  return {affine_perm(p, 1, 1), affine_perm(p, primitive_root, 0)};
}

inline std::vector<Permutation> shifted(const std::vector<Permutation>& perms, int offset,
                                        int total_degree) {
  std::vector<Permutation> out;
  for (const auto& p : perms) {
    std::vector<int> im(total_degree);
    for (int i = 0; i < total_degree; ++i) im[i] = i;
    for (int i = 0; i < p.degree(); ++i) im[offset + i] = offset + p.images[i];
    out.emplace_back(std::move(im));
  }
  return out;
}

}  // namespace detail

// Built-in groups, each with a canonical permutation realization.  The entry
// order is fixed; GroupOptions defaults give every entry a full table.
inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    using namespace detail;
    std::vector<CatalogEntry> list;
    auto add = [&](std::string name, int order, int degree, std::vector<Permutation> gens) {
      list.push_back(CatalogEntry{std::move(name), order, degree, std::move(gens)});
    };

    for (int n = 2; n <= 64; ++n) {
      std::vector<int> cyc(n);
      for (int i = 0; i < n; ++i) cyc[i] = i;
      add("C" + std::to_string(n), n, n, {cycle_perm(n, cyc)});
    }
    for (int n = 2; n <= 32; ++n) {
      // dihedral group of order 2n; n = 2 degenerates to the Klein four-group
      if (n == 2) {
        add("D4", 4, 4, {cycle_perm(4, {0, 1}), cycle_perm(4, {2, 3})});
        continue;
      }
      std::vector<int> rot(n);
      for (int i = 0; i < n; ++i) rot[i] = i;
      std::vector<int> refl(n);
      for (int i = 0; i < n; ++i) refl[i] = (n - i) % n;
      add("D" + std::to_string(2 * n), 2 * n, n,
          {cycle_perm(n, rot), Permutation(std::move(refl))});
    }
    add("Q8", 8, 8, regular_generators(quaternion8_table(), {1, 2}));
    add("Q16", 16, 16, regular_generators(quaternion16_table(), {1, 8}));
    add("S3", 6, 3, {cycle_perm(3, {0, 1, 2}), cycle_perm(3, {0, 1})});
    add("S4", 24, 4, {cycle_perm(4, {0, 1, 2, 3}), cycle_perm(4, {0, 1})});
    add("S5", 120, 5, {cycle_perm(5, {0, 1, 2, 3, 4}), cycle_perm(5, {0, 1})});
    add("A4", 12, 4, {cycle_perm(4, {0, 1, 2}), cycle_perm(4, {1, 2, 3})});
    add("A5", 60, 5, {cycle_perm(5, {0, 1, 2, 3, 4}), cycle_perm(5, {0, 1, 2})});
    // PSL(2,7) on the projective line over F_7, point 7 is infinity:
    // z -> z+1 and z -> -1/z
    add("PSL(2,7)", 168, 8,
        {cycle_perm(8, {0, 1, 2, 3, 4, 5, 6}),
         permutation_from_cycles(8, {{0, 7}, {1, 6}, {2, 3}, {4, 5}})});
    add("F20", 20, 5, agl1_generators(5, 2));
    add("F21", 21, 7, {affine_perm(7, 1, 1), affine_perm(7, 2, 0)});  // x -> 2x has order 3
    add("AGL(1,5)", 20, 5, agl1_generators(5, 2));
    add("AGL(1,7)", 42, 7, agl1_generators(7, 3));
    add("AGL(1,11)", 110, 11, agl1_generators(11, 2));
    add("AGL(1,13)", 156, 13, agl1_generators(13, 2));
    add("extraspecial-27-exp3", 27, 27,
        regular_generators(heisenberg3_table(), {9, 3}));
    // elementary abelian p^k as k disjoint p-cycles
    auto add_elemab = [&](int p, int k) {
      int order = 1;
      for (int i = 0; i < k; ++i) order *= p;
      std::vector<Permutation> gens;
      for (int i = 0; i < k; ++i) {
        std::vector<int> cyc(p);
        for (int j = 0; j < p; ++j) cyc[j] = i * p + j;
        gens.push_back(cycle_perm(p * k, cyc));
      }
      add("elemab-" + std::to_string(order), order, p * k, std::move(gens));
    };
    for (int k = 2; k <= 6; ++k) add_elemab(2, k);
    for (int k = 2; k <= 4; ++k) add_elemab(3, k);
    add_elemab(5, 2);
    add_elemab(7, 2);
    {
      auto d8 = std::vector<Permutation>{cycle_perm(4, {0, 1, 2, 3}), cycle_perm(4, {1, 3})};
      auto gens = shifted(d8, 0, 7);
      auto c3 = shifted({cycle_perm(3, {0, 1, 2})}, 4, 7);
      gens.insert(gens.end(), c3.begin(), c3.end());
      add("D8xC3", 24, 7, std::move(gens));
    }
    {
      auto q8 = regular_generators(quaternion8_table(), {1, 2});
      auto gens = shifted(q8, 0, 11);
      auto c3 = shifted({cycle_perm(3, {0, 1, 2})}, 8, 11);
      gens.insert(gens.end(), c3.begin(), c3.end());
      add("Q8xC3", 24, 11, std::move(gens));
    }
    return list;
  }();
  return entries;
}

// Case-sensitive lookup; "PSL(2,5)" is an alias for A5.
inline GroupPtr catalog_group(const std::string& name, const GroupOptions& opts = {}) {
  std::string key = name == "PSL(2,5)" ? "A5" : name;
  for (const auto& e : catalog())
    if (e.name == key) {
      auto g = std::make_shared<Group>(
          Group::from_generators(e.degree, e.generators, opts, e.name));
      if (g->order() != e.order)
        throw std::logic_error("catalog entry " + e.name + " has wrong order");
      return g;
    }
  throw ParseError("unknown catalog group: " + name);
}

}  // namespace orbigraph
