#pragma once

// Test-only brute-force oracles. Written from the game rules directly and
// deliberately share no code with the library: ordered heaps, std::set
// option sets, plain recursion, linear-scan mex, valuation by division.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Pair = std::pair<std::uint64_t, std::uint64_t>;

inline std::optional<unsigned> v2_by_division(std::uint64_t n) {
  if (n == 0) return std::nullopt;
  unsigned v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  return v;
}

inline unsigned mex_by_scan(const std::set<unsigned>& s) {
  unsigned m = 0;
  while (s.count(m)) ++m;
  return m;
}

inline Pair sorted_pair(std::uint64_t a, std::uint64_t b) { return a >= b ? Pair{a, b} : Pair{b, a}; }

// Delete Nim: pick a heap with a stone, drop the other heap, take one
// stone, leave the rest as two heaps (one may be empty).
inline std::set<Pair> delete_nim_moves(std::uint64_t x, std::uint64_t y) {
  std::set<Pair> out;
  for (std::uint64_t kept : {x, y}) {
    if (kept == 0) continue;
    for (std::uint64_t a = 0; a <= kept - 1; ++a) out.insert(sorted_pair(a, kept - 1 - a));
  }
  return out;
}

// VDN: drop one heap, split the other into two nonempty heaps.
inline std::set<Pair> vdn_moves(std::uint64_t x, std::uint64_t y) {
  std::set<Pair> out;
  for (std::uint64_t kept : {x, y}) {
    for (std::uint64_t a = 1; a < kept; ++a) out.insert(sorted_pair(a, kept - a));
  }
  return out;
}

class TwoHeapOracle {
 public:
  unsigned delete_nim(std::uint64_t x, std::uint64_t y) {
    const auto key = sorted_pair(x, y);
    if (auto it = dn_.find(key); it != dn_.end()) return it->second;
    std::set<unsigned> seen;
    for (const auto& [a, b] : delete_nim_moves(x, y)) seen.insert(delete_nim(a, b));
    return dn_[key] = mex_by_scan(seen);
  }

  unsigned vdn(std::uint64_t x, std::uint64_t y) {
    const auto key = sorted_pair(x, y);
    if (auto it = vdn_.find(key); it != vdn_.end()) return it->second;
    std::set<unsigned> seen;
    for (const auto& [a, b] : vdn_moves(x, y)) seen.insert(vdn(a, b));
    return vdn_[key] = mex_by_scan(seen);
  }

  // Disjoint sum of two Delete Nim positions, straight from the definition.
  unsigned delete_nim_sum(Pair g, Pair h) {
    const auto key = std::make_pair(g, h);
    if (auto it = sums_.find(key); it != sums_.end()) return it->second;
    std::set<unsigned> seen;
    for (const auto& g2 : delete_nim_moves(g.first, g.second)) seen.insert(delete_nim_sum(g2, h));
    for (const auto& h2 : delete_nim_moves(h.first, h.second)) seen.insert(delete_nim_sum(g, h2));
    return sums_[key] = mex_by_scan(seen);
  }

 private:
  std::map<Pair, unsigned> dn_;
  std::map<Pair, unsigned> vdn_;
  std::map<std::pair<Pair, Pair>, unsigned> sums_;
};

// Nim on multisets of heaps (sorted descending, zeros dropped).
class NimOracle {
 public:
  unsigned grundy(std::vector<std::uint64_t> heaps) {
    normalize(heaps);
    if (auto it = memo_.find(heaps); it != memo_.end()) return it->second;
    std::set<unsigned> seen;
    for (std::size_t i = 0; i < heaps.size(); ++i) {
      for (std::uint64_t v = 0; v < heaps[i]; ++v) {
        auto next = heaps;
        next[i] = v;
        seen.insert(grundy(next));
      }
    }
    return memo_[heaps] = mex_by_scan(seen);
  }

  static void normalize(std::vector<std::uint64_t>& heaps) {
    heaps.erase(std::remove(heaps.begin(), heaps.end(), 0u), heaps.end());
    std::sort(heaps.rbegin(), heaps.rend());
  }

 private:
  std::map<std::vector<std::uint64_t>, unsigned> memo_;
};

}  // namespace oracle
