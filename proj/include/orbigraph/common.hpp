#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbigraph {

// Dense element index within a Group. Index 0 is always the identity.
using Elem = int;

// ---------------------------------------------------------------------------
// Errors

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidPermutation : Error {
  explicit InvalidPermutation(const std::string& m) : Error(m) {}
};

struct ClosureOverflow : Error {
  explicit ClosureOverflow(const std::string& m) : Error(m) {}
};

struct NotAGroup : Error {
  // witness triple (a,b,c) with (ab)c != a(bc); {-1,-1,-1} for shape failures
  std::array<int, 3> witness{-1, -1, -1};
  explicit NotAGroup(const std::string& m, std::array<int, 3> w = {-1, -1, -1})
      : Error(m), witness(w) {}
};

struct NotAnAutomorphism : Error {
  Elem x = -1, y = -1;  // witness pair with map(xy) != map(x)map(y)
  explicit NotAnAutomorphism(const std::string& m, Elem wx = -1, Elem wy = -1)
      : Error(m), x(wx), y(wy) {}
};

struct AutCapExceeded : Error {
  explicit AutCapExceeded(const std::string& m) : Error(m) {}
};

struct SearchBudgetExceeded : Error {
  explicit SearchBudgetExceeded(const std::string& m) : Error(m) {}
};

struct InvalidPartition : Error {
  explicit InvalidPartition(const std::string& m) : Error(m) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error(m) {}
};

// Node budget for backtracking subgroup searches. Exhaustion raises
// SearchBudgetExceeded so "gave up" is never reported as "proved absent".
struct SearchBudget {
  long long nodes = 1000000;
  void spend(const char* what) {
    if (--nodes < 0) throw SearchBudgetExceeded(what);
  }
};

// ---------------------------------------------------------------------------
// Small number theory helpers (orders are tiny; trial division is fine)

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// distinct prime divisors of n, ascending
inline std::vector<int> prime_factors(int n) {
  std::vector<int> ps;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// largest power of p dividing n
inline int p_part(int n, int p) {
  int pk = 1;
  while (n % p == 0) {
    n /= p;
    pk *= p;
  }
  return pk;
}

// true iff n = p^k for a prime p and k >= 1; reports p
inline bool is_prime_power(int n, int* base = nullptr) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      if (n != 1) return false;
      if (base) *base = d;
      return true;
    }
  }
  if (base) *base = n;  // n itself prime
  return true;
}

// ---------------------------------------------------------------------------
// IndexSet: fixed-capacity bitset over element indices

class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int capacity() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }

  IndexSet& operator&=(const IndexSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }

  bool operator==(const IndexSet& o) const { return n_ == o.n_ && w_ == o.w_; }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    for (int i = 0; i < n_; ++i)
      if (test(i)) v.push_back(i);
    return v;
  }

  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

inline IndexSet make_index_set(int n, const std::vector<int>& members) {
  IndexSet s(n);
  for (int m : members) s.set(m);
  return s;
}

// FNV-style hash of an int sequence, used for map keys
inline std::uint64_t hash_ints(const std::vector<int>& v) {
  std::uint64_t h = 1469598103934665603ull;
  for (int x : v) {
    h ^= std::uint64_t(std::uint32_t(x));
    h *= 1099511628211ull;
  }
  return h;
}

struct IntVecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    return static_cast<std::size_t>(hash_ints(v));
  }
};

}  // namespace orbigraph
