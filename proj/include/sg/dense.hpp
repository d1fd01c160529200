#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sg/engine.hpp"
#include "sg/rulesets.hpp"

namespace sg::dense {

/// Square table of Grundy values for coordinates 0..bound, stored for both
/// heap orders. Cells outside the game's domain (a zero heap in VDN) hold
/// kUnused.
class GrundyGrid {
 public:
  static constexpr std::uint8_t kUnused = 0xff;

  GrundyGrid() = default;
  explicit GrundyGrid(HeapSize bound);

  HeapSize bound() const { return bound_; }
  GrundyValue at(HeapSize x, HeapSize y) const { return cells_[index(x, y)]; }
  std::uint8_t raw(HeapSize x, HeapSize y) const { return cells_[index(x, y)]; }
  void set(HeapSize x, HeapSize y, GrundyValue g);

  friend bool operator==(const GrundyGrid&, const GrundyGrid&) = default;

 private:
  std::size_t index(HeapSize x, HeapSize y) const { return x * (bound_ + 1) + y; }

  HeapSize bound_ = 0;
  std::vector<std::uint8_t> cells_;
};

struct KernelConfig {
  int workers = 0;  // 0: OpenMP default
  std::size_t position_budget = kDefaultPositionBudget;
};

// Parallel kernels. For each heap total s they build the bitmask of Grundy
// values over every split of s (every option enumerated once), then
//   delete nim: G(x,y) = mex(splits[x-1] | splits[y-1])
//   vdn:        G(x,y) = mex(splits[x]   | splits[y])
// Throws ResourceBudgetExceeded if (bound+1)^2 cells exceed the budget.
GrundyGrid solve_delete_nim(HeapSize bound, const KernelConfig& config = {});
GrundyGrid solve_vdn(HeapSize bound, const KernelConfig& config = {});

// Serial reference: per position, enumerate the option list from the
// rulesets module and take mex of the looked-up values. O(bound^3).
GrundyGrid solve_delete_nim_reference(HeapSize bound);
GrundyGrid solve_vdn_reference(HeapSize bound);

/// Engine facade over a dense grid for the two-heap games; the grid is
/// recomputed with a larger bound when a query falls outside it.
template <class R>
class DenseEngine {
 public:
  using Position = typename R::Position;

  explicit DenseEngine(KernelConfig config = {}) : config_(config) {}

  GrundyValue grundy(const Position& p) {
    ensure(std::max(p.x, p.y));
    return grid_->at(p.x, p.y);
  }
  Outcome classify(const Position& p) { return grundy(p) == 0 ? Outcome::P : Outcome::N; }
  std::optional<Position> best_move(const Position& p) {
    if (grundy(p) == 0) return std::nullopt;
    for (const auto& q : R::options(p, kMaxDenseHeap)) {
      if (grundy(q) == 0) return q;
    }
    throw std::logic_error("N-position without a zero option");
  }
  std::vector<Position> options(const Position& p) const { return R::options(p, kMaxDenseHeap); }

 private:
  static constexpr HeapSize kMaxDenseHeap = HeapSize{1} << 20;

  void ensure(HeapSize needed) {
    if (grid_ && grid_->bound() >= needed) return;
    if constexpr (std::is_same_v<R, DeleteNim>) {
      grid_ = solve_delete_nim(needed, config_);
    } else {
      grid_ = solve_vdn(needed, config_);
    }
  }

  KernelConfig config_;
  std::optional<GrundyGrid> grid_;
};

}  // namespace sg::dense
