#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "sg/report.hpp"
#include "sg/rulesets.hpp"

namespace sg {

using GrundyValue = std::uint32_t;

enum class Outcome { P, N };

inline const char* to_string(Outcome o) { return o == Outcome::P ? "P" : "N"; }

/// Least non-negative integer not in `values`. Duplicates are allowed.
GrundyValue mex(std::span<const GrundyValue> values);
inline GrundyValue mex(std::initializer_list<GrundyValue> values) {
  return mex(std::span<const GrundyValue>(values.begin(), values.size()));
}

/// Thrown when a computation would need more positions than its budget.
class ResourceBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultPositionBudget = std::size_t{1} << 26;

struct EngineConfig {
  std::size_t position_budget = kDefaultPositionBudget;
  HeapSize max_heap = kDefaultMaxHeap;
  /// When set, options are visited in an order shuffled with this seed.
  std::optional<std::uint64_t> shuffle_seed;
};

template <class R>
concept Ruleset = requires(const typename R::Position& p, HeapSize max_heap) {
  { R::options(p, max_heap) } -> std::same_as<std::vector<typename R::Position>>;
  { std::hash<typename R::Position>{}(p) } -> std::convertible_to<std::size_t>;
};

/// Memoized Grundy evaluation over any ruleset. Evaluation uses an explicit
/// stack, so chains of depth Θ(heap) do not touch the call stack. Not
/// thread-safe; give each worker its own engine.
template <Ruleset R>
class Engine {
 public:
  using Position = typename R::Position;
  using MemoTable = std::unordered_map<Position, GrundyValue>;

  explicit Engine(EngineConfig config = {})
      : config_(config), rng_(config.shuffle_seed.value_or(0)) {}

  GrundyValue grundy(const Position& root) {
    if (auto it = memo_.find(root); it != memo_.end()) return it->second;

    struct Frame {
      Position position;
      std::vector<Position> options;
      std::size_t next = 0;
    };
    std::vector<Frame> stack;
    stack.push_back(Frame{root, visit_order(root)});
    std::vector<GrundyValue> values;

    while (!stack.empty()) {
      Frame& top = stack.back();
      while (top.next < top.options.size() && memo_.contains(top.options[top.next])) ++top.next;
      if (top.next < top.options.size()) {
        Position child = top.options[top.next];
        auto child_options = visit_order(child);
        stack.push_back(Frame{std::move(child), std::move(child_options)});
        continue;
      }
      values.clear();
      for (const auto& q : top.options) values.push_back(memo_.at(q));
      if (memo_.size() >= config_.position_budget) {
        throw ResourceBudgetExceeded("position budget of " + std::to_string(config_.position_budget) +
                                     " exhausted");
      }
      memo_.emplace(std::move(top.position), mex(values));
      stack.pop_back();
    }
    return memo_.at(root);
  }

  Outcome classify(const Position& p) { return grundy(p) == 0 ? Outcome::P : Outcome::N; }

  /// Smallest canonical option with Grundy value 0, or nothing when `p` is
  /// a P-position (terminal positions included).
  std::optional<Position> best_move(const Position& p) {
    if (grundy(p) == 0) return std::nullopt;
    for (const auto& q : R::options(p, config_.max_heap)) {
      if (grundy(q) == 0) return q;
    }
    throw std::logic_error("N-position without a zero option");
  }

  std::vector<Position> options(const Position& p) const { return R::options(p, config_.max_heap); }

  const MemoTable& memo() const { return memo_; }
  const EngineConfig& config() const { return config_; }

 private:
  std::vector<Position> visit_order(const Position& p) {
    auto opts = R::options(p, config_.max_heap);
    if (config_.shuffle_seed) std::shuffle(opts.begin(), opts.end(), rng_);
    return opts;
  }

  EngineConfig config_;
  MemoTable memo_;
  std::mt19937_64 rng_;
};

/// Both sides of G(g + h) = G(g) xor G(h): `direct` comes from mex
/// recursion over the sum graph, `left`/`right` from the components alone.
struct SumGrundy {
  GrundyValue direct = 0;
  GrundyValue left = 0;
  GrundyValue right = 0;

  GrundyValue xor_of_parts() const { return left ^ right; }
  bool equal() const { return direct == xor_of_parts(); }
};

SumGrundy sum_grundy(Engine<SumGame>& sums, Engine<AnyGame>& components, const AnyPosition& g,
                     const AnyPosition& h);
SumGrundy sum_grundy(const AnyPosition& g, const AnyPosition& h, const EngineConfig& config = {});

/// Single-position report for the sum theorem on g + h.
VerificationReport sum_grundy_check(const AnyPosition& g, const AnyPosition& h,
                                    const EngineConfig& config = {});

}  // namespace sg
