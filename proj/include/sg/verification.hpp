#pragma once

#include <cstdint>
#include <vector>

#include "sg/dense.hpp"
#include "sg/engine.hpp"
#include "sg/report.hpp"
#include "sg/rulesets.hpp"

namespace sg {

/// Which engine produces the brute-force side of a closed-form check.
enum class Backend {
  dense,    // split-mask grid kernel
  generic,  // memoized Engine<R> over the rulesets' option lists
};

struct SweepConfig {
  int workers = 0;  // 0: OpenMP default
  std::size_t position_budget = kDefaultPositionBudget;
  Backend backend = Backend::dense;
};

// Default sweep bounds.
struct SweepBounds {
  HeapSize delete_nim = 4096;
  HeapSize vdn = 256;
  HeapSize isomorphism = 64;
  HeapSize bouton_heaps = 3;
  HeapSize bouton_size = 16;
  HeapSize sum = 12;
  HeapSize proof = 128;
  HeapSize play = 64;
  HeapSize order = 32;
};

// Grid sizes: canonical two-heap positions with coordinates in [lo, bound].
std::uint64_t triangle_count(HeapSize lo, HeapSize bound);

/// Engine vs v2((x|y)+1) on all 0 <= y <= x <= bound.
VerificationReport verify_delete_nim_formula(HeapSize bound, const SweepConfig& config = {});

/// Engine on VDN rules vs v2(((x-1)|(y-1))+1) on all 1 <= y <= x <= bound.
VerificationReport verify_vdn_formula(HeapSize bound, const SweepConfig& config = {});

/// Engine classification vs nim-sum = 0 on every canonical Nim position with
/// at most `max_heaps` heaps of size <= `max_size`.
VerificationReport verify_bouton(HeapSize max_heaps, HeapSize max_size, const SweepConfig& config = {});

/// Replays both halves of the closed-form proof at (x,y):
///  (a) no option q has delete_nim_grundy(q) = h, where h = delete_nim_grundy(x,y);
///  (b) for each h' < h, (x - 2^h', 2^h' - 1) (or the y-heap variant when bit
///      h' of x is clear) is a legal option with closed-form value h'.
VerificationReport verify_proof_steps(HeapSize x, HeapSize y);
VerificationReport verify_proof_steps_sweep(HeapSize bound, const SweepConfig& config = {});

/// Sum theorem on every ordered pair of canonical Delete Nim positions with
/// coordinates <= bound.
VerificationReport verify_sum_theorem(HeapSize bound, const SweepConfig& config = {});

/// Option-set commutation under F plus Grundy commutation via the generic
/// engine, for all 1 <= y <= x <= bound.
VerificationReport verify_isomorphism(HeapSize bound, const SweepConfig& config = {});

/// From every N-position with coordinates <= bound, always playing
/// best_move wins against every opponent reply sequence.
VerificationReport verify_optimal_play(HeapSize bound, const SweepConfig& config = {});

/// Generic engine values with shuffled option orders (one run per seed)
/// agree with the unshuffled run on all Delete Nim positions <= bound.
VerificationReport verify_traversal_order(HeapSize bound, const std::vector<std::uint64_t>& seeds,
                                          const SweepConfig& config = {});

}  // namespace sg
