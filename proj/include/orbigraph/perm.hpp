#pragma once

#include <algorithm>
#include <vector>

#include "common.hpp"

namespace orbigraph {

// A permutation of {0,...,degree-1}, stored as the image array.
struct Permutation {
  std::vector<int> images;  // images[i] = where point i goes

  Permutation() = default;
  explicit Permutation(std::vector<int> im) : images(std::move(im)) {}

  int degree() const { return static_cast<int>(images.size()); }
  int operator()(int pt) const { return images[pt]; }

  static Permutation identity(int degree) {
    std::vector<int> im(degree);
    for (int i = 0; i < degree; ++i) im[i] = i;
    return Permutation(std::move(im));
  }

  bool is_bijection() const {
    std::vector<char> seen(images.size(), 0);
    for (int x : images) {
      if (x < 0 || x >= degree() || seen[x]) return false;
      seen[x] = 1;
    }
    return true;
  }

  // (a.after(b))(x) = a(b(x))
  Permutation after(const Permutation& b) const {
    std::vector<int> im(images.size());
    for (int i = 0; i < degree(); ++i) im[i] = images[b.images[i]];
    return Permutation(std::move(im));
  }

  Permutation inverse() const {
    std::vector<int> im(images.size());
    for (int i = 0; i < degree(); ++i) im[images[i]] = i;
    return Permutation(std::move(im));
  }

  bool operator==(const Permutation& o) const { return images == o.images; }
  bool operator<(const Permutation& o) const { return images < o.images; }
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    return static_cast<std::size_t>(hash_ints(p.images));
  }
};

// Builds a permutation from disjoint cycles over {0,...,degree-1}.
// Repeated points raise InvalidPermutation.
inline Permutation permutation_from_cycles(int degree,
                                           const std::vector<std::vector<int>>& cycles) {
  Permutation p = Permutation::identity(degree);
  std::vector<char> touched(degree, 0);
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i];
      int to = cyc[(i + 1) % cyc.size()];
      if (from < 0 || from >= degree)
        throw InvalidPermutation("cycle point out of range");
      if (touched[from]) throw InvalidPermutation("point repeated across cycles");
      touched[from] = 1;
      p.images[from] = to;
    }
  }
  if (!p.is_bijection()) throw InvalidPermutation("cycles do not define a bijection");
  return p;
}

}  // namespace orbigraph
