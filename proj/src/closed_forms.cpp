#include "sg/closed_forms.hpp"

#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "sg/rulesets.hpp"

namespace sg {

unsigned Valuation::value() const {
  if (!value_) throw std::logic_error("valuation of 0 is infinite");
  return *value_;
}

std::string Valuation::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("inf");
}

std::uint64_t nim_sum(std::span<const std::uint64_t> heaps) {
  return std::accumulate(heaps.begin(), heaps.end(), std::uint64_t{0}, std::bit_xor<>{});
}

bool bouton_is_p(std::span<const std::uint64_t> heaps) { return nim_sum(heaps) == 0; }

Valuation v2(std::uint64_t n) {
  if (n == 0) return Valuation::infinite();
  return Valuation::finite(static_cast<unsigned>(std::countr_zero(n)));
}

unsigned delete_nim_grundy(std::uint64_t x, std::uint64_t y) {
  const std::uint64_t joined = bit_or(x, y);
  // (2^64 - 1) + 1 = 2^64, whose valuation is 64.
  if (joined == ~std::uint64_t{0}) return 64;
  return v2(joined + 1).value();
}

unsigned vdn_grundy(std::uint64_t x, std::uint64_t y) {
  if (x == 0 || y == 0) throw DomainError("VDN heaps must be at least 1");
  return delete_nim_grundy(x - 1, y - 1);
}

}  // namespace sg
