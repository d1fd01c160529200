#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sg {

using HeapSize = std::uint64_t;

/// Largest heap any option enumeration accepts unless told otherwise.
/// Enumeration is linear in the heap size, so unbounded inputs are refused.
inline constexpr HeapSize kDefaultMaxHeap = 4096;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Two-heap positions are unordered; canonical form keeps x >= y.

struct DeleteNimPosition {
  HeapSize x = 0;
  HeapSize y = 0;

  static DeleteNimPosition canonical(HeapSize a, HeapSize b) {
    return a >= b ? DeleteNimPosition{a, b} : DeleteNimPosition{b, a};
  }
  bool terminal() const { return x == 0 && y == 0; }

  friend auto operator<=>(const DeleteNimPosition&, const DeleteNimPosition&) = default;
};

struct VdnPosition {
  HeapSize x = 1;
  HeapSize y = 1;

  /// Throws DomainError unless both heaps are nonempty.
  static VdnPosition canonical(HeapSize a, HeapSize b);
  bool terminal() const { return x == 1 && y == 1; }

  friend auto operator<=>(const VdnPosition&, const VdnPosition&) = default;
};

struct NimPosition {
  std::vector<HeapSize> heaps;  // sorted descending, no zeros

  static NimPosition canonical(std::vector<HeapSize> heaps);
  bool terminal() const { return heaps.empty(); }

  friend auto operator<=>(const NimPosition&, const NimPosition&) = default;
};

using AnyPosition = std::variant<DeleteNimPosition, VdnPosition, NimPosition>;

/// Disjoint sum g + h: a move is a move in exactly one component.
struct SumPosition {
  AnyPosition left;
  AnyPosition right;

  friend auto operator<=>(const SumPosition&, const SumPosition&) = default;
};

// Option enumeration. Every result is deduplicated, canonical, and sorted
// ascending, so the first element is the smallest canonical option.

std::vector<DeleteNimPosition> delete_nim_options(const DeleteNimPosition& p,
                                                  HeapSize max_heap = kDefaultMaxHeap);
std::vector<VdnPosition> vdn_options(const VdnPosition& p, HeapSize max_heap = kDefaultMaxHeap);
std::vector<NimPosition> nim_options(const NimPosition& p, HeapSize max_heap = kDefaultMaxHeap);
std::vector<AnyPosition> any_options(const AnyPosition& p, HeapSize max_heap = kDefaultMaxHeap);
std::vector<SumPosition> sum_options(const SumPosition& p, HeapSize max_heap = kDefaultMaxHeap);

bool is_terminal(const AnyPosition& p);

// Text syntax: `x,y` for two-heap games, `n1,n2,...` for Nim. Whitespace
// around commas is ignored; `()` or the empty string is the empty Nim
// position.

std::vector<HeapSize> parse_heaps(std::string_view text);
DeleteNimPosition parse_delete_nim(std::string_view text);
VdnPosition parse_vdn(std::string_view text);
NimPosition parse_nim(std::string_view text);

std::string to_string(const DeleteNimPosition& p);
std::string to_string(const VdnPosition& p);
std::string to_string(const NimPosition& p);
std::string to_string(const AnyPosition& p);
std::string to_string(const SumPosition& p);

// Ruleset traits consumed by the engine.

struct DeleteNim {
  using Position = DeleteNimPosition;
  static constexpr std::string_view name = "delete-nim";
  static std::vector<Position> options(const Position& p, HeapSize max_heap) {
    return delete_nim_options(p, max_heap);
  }
};

struct Vdn {
  using Position = VdnPosition;
  static constexpr std::string_view name = "vdn";
  static std::vector<Position> options(const Position& p, HeapSize max_heap) {
    return vdn_options(p, max_heap);
  }
};

struct Nim {
  using Position = NimPosition;
  static constexpr std::string_view name = "nim";
  static std::vector<Position> options(const Position& p, HeapSize max_heap) {
    return nim_options(p, max_heap);
  }
};

struct AnyGame {
  using Position = AnyPosition;
  static constexpr std::string_view name = "any";
  static std::vector<Position> options(const Position& p, HeapSize max_heap) {
    return any_options(p, max_heap);
  }
};

struct SumGame {
  using Position = SumPosition;
  static constexpr std::string_view name = "sum";
  static std::vector<Position> options(const Position& p, HeapSize max_heap) {
    return sum_options(p, max_heap);
  }
};

namespace detail {
inline std::size_t hash_mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}
}  // namespace detail

}  // namespace sg

template <>
struct std::hash<sg::DeleteNimPosition> {
  std::size_t operator()(const sg::DeleteNimPosition& p) const noexcept {
    return sg::detail::hash_mix(std::hash<std::uint64_t>{}(p.x), p.y);
  }
};

template <>
struct std::hash<sg::VdnPosition> {
  std::size_t operator()(const sg::VdnPosition& p) const noexcept {
    return sg::detail::hash_mix(std::hash<std::uint64_t>{}(p.x), p.y);
  }
};

template <>
struct std::hash<sg::NimPosition> {
  std::size_t operator()(const sg::NimPosition& p) const noexcept {
    std::size_t seed = p.heaps.size();
    for (auto h : p.heaps) seed = sg::detail::hash_mix(seed, h);
    return seed;
  }
};

template <>
struct std::hash<sg::SumPosition> {
  std::size_t operator()(const sg::SumPosition& p) const noexcept {
    std::hash<sg::AnyPosition> h;
    return sg::detail::hash_mix(h(p.left), h(p.right));
  }
};
