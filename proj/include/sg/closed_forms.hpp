#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace sg {

/// 2-adic valuation of an unsigned integer. Zero has infinite valuation,
/// which is a separate state rather than a large integer, so callers have to
/// check `is_infinite()` before using the count.
class Valuation {
 public:
  static Valuation infinite() { return Valuation{}; }
  static Valuation finite(unsigned v) { return Valuation{v}; }

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws std::logic_error on the infinite valuation.
  unsigned value() const;

  std::string to_string() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  Valuation() = default;
  explicit Valuation(unsigned v) : value_(v) {}
  std::optional<unsigned> value_;
};

/// Exclusive-OR fold; the empty sequence yields 0.
std::uint64_t nim_sum(std::span<const std::uint64_t> heaps);

/// Bouton's criterion: a Nim position is P iff its nim-sum is zero.
bool bouton_is_p(std::span<const std::uint64_t> heaps);

constexpr std::uint64_t bit_or(std::uint64_t a, std::uint64_t b) { return a | b; }

/// Largest v with 2^v | n, by trailing-zero count.
Valuation v2(std::uint64_t n);

/// G((x,y)) = v2((x | y) + 1) for Delete Nim. The all-ones word wraps to
/// 2^64 and is handled as such, so the result is always finite.
unsigned delete_nim_grundy(std::uint64_t x, std::uint64_t y);

/// G((x,y)) = v2(((x-1) | (y-1)) + 1) for VDN. Throws DomainError if either
/// heap is empty.
unsigned vdn_grundy(std::uint64_t x, std::uint64_t y);

}  // namespace sg
