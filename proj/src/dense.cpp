#include "sg/dense.hpp"

#include <omp.h>

#include <bit>
#include <string>

namespace sg::dense {

namespace {

using Mask = std::uint64_t;

int resolve_workers(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

void check_budget(HeapSize bound, std::size_t budget) {
  const HeapSize side = bound + 1;
  if (bound >= (HeapSize{1} << 32) || side * side > budget) {
    throw ResourceBudgetExceeded("dense grid for bound " + std::to_string(bound) + " exceeds budget of " +
                                 std::to_string(budget) + " positions");
  }
}

// Two-heap Grundy values stay below log2(2 * bound + 2), far under 64 for
// any grid that fits in memory.
GrundyValue mex_of_mask(Mask m) { return static_cast<GrundyValue>(std::countr_one(m)); }

Mask bit(GrundyValue g) { return Mask{1} << g; }

}  // namespace

GrundyGrid::GrundyGrid(HeapSize bound) : bound_(bound), cells_((bound + 1) * (bound + 1), kUnused) {}

void GrundyGrid::set(HeapSize x, HeapSize y, GrundyValue g) {
  cells_[index(x, y)] = static_cast<std::uint8_t>(g);
  cells_[index(y, x)] = static_cast<std::uint8_t>(g);
}

GrundyGrid solve_delete_nim(HeapSize bound, const KernelConfig& config) {
  check_budget(bound, config.position_budget);
  const int workers = resolve_workers(config.workers);
  const auto n = static_cast<std::int64_t>(bound);

  // splits[s]: Grundy values reachable by keeping a heap of s+1 stones.
  std::vector<Mask> splits(bound + 1, 0);
  auto heap_mask = [&](std::int64_t h) { return h == 0 ? Mask{0} : splits[h - 1]; };

  for (std::int64_t s = 0; s < n; ++s) {
    Mask m = 0;
#pragma omp parallel for num_threads(workers) reduction(| : m) schedule(static) if (s > 4096)
    for (std::int64_t b = 0; b <= s / 2; ++b) {
      m |= bit(mex_of_mask(heap_mask(s - b) | heap_mask(b)));
    }
    splits[s] = m;
  }

  GrundyGrid grid(bound);
#pragma omp parallel for num_threads(workers) schedule(dynamic, 16)
  for (std::int64_t x = 0; x <= n; ++x) {
    for (std::int64_t y = 0; y <= x; ++y) grid.set(x, y, mex_of_mask(heap_mask(x) | heap_mask(y)));
  }
  return grid;
}

GrundyGrid solve_vdn(HeapSize bound, const KernelConfig& config) {
  check_budget(bound, config.position_budget);
  const int workers = resolve_workers(config.workers);
  const auto n = static_cast<std::int64_t>(bound);

  // splits[s]: Grundy values reachable by splitting a heap of s stones.
  std::vector<Mask> splits(bound + 1, 0);
  for (std::int64_t s = 2; s <= n; ++s) {
    Mask m = 0;
#pragma omp parallel for num_threads(workers) reduction(| : m) schedule(static) if (s > 4096)
    for (std::int64_t b = 1; b <= s / 2; ++b) {
      m |= bit(mex_of_mask(splits[s - b] | splits[b]));
    }
    splits[s] = m;
  }

  GrundyGrid grid(bound);
#pragma omp parallel for num_threads(workers) schedule(dynamic, 16)
  for (std::int64_t x = 1; x <= n; ++x) {
    for (std::int64_t y = 1; y <= x; ++y) grid.set(x, y, mex_of_mask(splits[x] | splits[y]));
  }
  return grid;
}

namespace {

template <class Options>
GrundyGrid solve_reference(HeapSize bound, HeapSize lowest, Options options) {
  GrundyGrid grid(bound);
  std::vector<GrundyValue> values;
  // Every option of (x,y) has a strictly smaller larger heap, so row order
  // by the larger heap respects dependencies.
  for (HeapSize x = lowest; x <= bound; ++x) {
    for (HeapSize y = lowest; y <= x; ++y) {
      values.clear();
      for (const auto& q : options(x, y)) values.push_back(grid.at(q.x, q.y));
      grid.set(x, y, mex(values));
    }
  }
  return grid;
}

}  // namespace

GrundyGrid solve_delete_nim_reference(HeapSize bound) {
  return solve_reference(bound, 0, [bound](HeapSize x, HeapSize y) {
    return delete_nim_options({x, y}, bound);
  });
}

GrundyGrid solve_vdn_reference(HeapSize bound) {
  return solve_reference(bound, 1, [bound](HeapSize x, HeapSize y) {
    return vdn_options({x, y}, bound);
  });
}

}  // namespace sg::dense
