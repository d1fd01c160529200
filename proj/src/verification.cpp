#include "sg/verification.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <memory>
#include <unordered_map>

#include "sg/closed_forms.hpp"
#include "sg/isomorphism.hpp"

namespace sg {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int resolve_workers(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

/// Runs fn(row, thread) for row in [begin, end) across workers. The first
/// exception thrown by any row is rethrown after the loop.
template <class Fn>
void parallel_rows(std::int64_t begin, std::int64_t end, int workers, Fn&& fn) {
  std::exception_ptr error;
  std::atomic<bool> failed{false};
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
  for (std::int64_t row = begin; row < end; ++row) {
    if (failed.load(std::memory_order_relaxed)) continue;
    try {
      fn(row, omp_get_thread_num());
    } catch (...) {
#pragma omp critical(sg_sweep_error)
      {
        if (!error) error = std::current_exception();
      }
      failed = true;
    }
  }
  if (error) std::rethrow_exception(error);
}

HeapSize enumeration_limit(HeapSize bound) { return std::max(bound, kDefaultMaxHeap); }

EngineConfig engine_config(const SweepConfig& config, HeapSize bound) {
  EngineConfig ec;
  ec.position_budget = config.position_budget;
  ec.max_heap = enumeration_limit(bound);
  return ec;
}

dense::KernelConfig kernel_config(const SweepConfig& config) {
  return dense::KernelConfig{config.workers, config.position_budget};
}

std::string pos_text(HeapSize x, HeapSize y) { return std::to_string(x) + "," + std::to_string(y); }

/// Compares `engine_value(x,y)` with `formula(x,y)` over the canonical
/// triangle lo <= y <= x <= bound.
template <class EngineValue, class Formula>
std::vector<Mismatch> compare_triangle(HeapSize lo, HeapSize bound, int workers, EngineValue engine_value,
                                       Formula formula) {
  if (bound < lo) return {};
  std::vector<std::vector<Mismatch>> rows(bound + 1);
  parallel_rows(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(bound) + 1, workers,
                [&](std::int64_t x, int) {
                  for (HeapSize y = lo; y <= static_cast<HeapSize>(x); ++y) {
                    const auto expected = formula(x, y);
                    const auto actual = engine_value(x, y);
                    if (expected != actual) {
                      rows[x].push_back({pos_text(x, y), std::to_string(expected), std::to_string(actual)});
                    }
                  }
                });
  return merge_mismatches(std::move(rows));
}

}  // namespace

std::uint64_t triangle_count(HeapSize lo, HeapSize bound) {
  if (bound < lo) return 0;
  const std::uint64_t k = bound - lo + 1;
  return k * (k + 1) / 2;
}

VerificationReport verify_delete_nim_formula(HeapSize bound, const SweepConfig& config) {
  const auto start = Clock::now();
  VerificationReport r;
  r.check = "delete-nim-formula";
  r.parameters = config.backend == Backend::dense ? "engine=dense" : "engine=generic";
  r.bound = bound;
  const int workers = resolve_workers(config.workers);
  auto formula = [](HeapSize x, HeapSize y) { return GrundyValue{delete_nim_grundy(x, y)}; };

  if (config.backend == Backend::dense) {
    const auto grid = dense::solve_delete_nim(bound, kernel_config(config));
    r.mismatches = compare_triangle(0, bound, workers, [&](HeapSize x, HeapSize y) { return grid.at(x, y); },
                                    formula);
  } else {
    Engine<DeleteNim> engine(engine_config(config, bound));
    for (HeapSize x = 0; x <= bound; ++x) engine.grundy({x, x});  // fills the memo serially
    r.mismatches = compare_triangle(
        0, bound, 1, [&](HeapSize x, HeapSize y) { return engine.grundy({x, y}); }, formula);
  }
  r.positions_checked = triangle_count(0, bound);
  r.elapsed_ms = ms_since(start);
  return r;
}

VerificationReport verify_vdn_formula(HeapSize bound, const SweepConfig& config) {
  if (bound < 1) throw DomainError("VDN sweep bound must be at least 1");
  const auto start = Clock::now();
  VerificationReport r;
  r.check = "vdn-formula";
  r.parameters = config.backend == Backend::dense ? "engine=dense" : "engine=generic";
  r.bound = bound;
  const int workers = resolve_workers(config.workers);
  auto formula = [](HeapSize x, HeapSize y) { return GrundyValue{vdn_grundy(x, y)}; };

  if (config.backend == Backend::dense) {
    const auto grid = dense::solve_vdn(bound, kernel_config(config));
    r.mismatches = compare_triangle(1, bound, workers, [&](HeapSize x, HeapSize y) { return grid.at(x, y); },
                                    formula);
  } else {
    Engine<Vdn> engine(engine_config(config, bound));
    r.mismatches = compare_triangle(
        1, bound, 1, [&](HeapSize x, HeapSize y) { return engine.grundy({x, y}); }, formula);
  }
  r.positions_checked = triangle_count(1, bound);
  r.elapsed_ms = ms_since(start);
  return r;
}

VerificationReport verify_bouton(HeapSize max_heaps, HeapSize max_size, const SweepConfig& config) {
  if (max_heaps < 1) throw DomainError("Bouton sweep needs at least one heap");
  const auto start = Clock::now();
  VerificationReport r;
  r.check = "bouton";
  r.parameters = "heaps=" + std::to_string(max_heaps) + ",size=" + std::to_string(max_size);
  r.bound = max_size;
  const int workers = resolve_workers(config.workers);

  // Canonical positions = non-increasing tuples of length max_heaps over
  // [0, max_size]; partitioned by the largest heap.
  std::vector<std::vector<Mismatch>> rows(max_size + 1);
  std::vector<std::uint64_t> counts(max_size + 1, 0);
  std::vector<std::unique_ptr<Engine<Nim>>> engines(workers);

  parallel_rows(0, static_cast<std::int64_t>(max_size) + 1, workers, [&](std::int64_t top, int thread) {
    auto& engine = engines[thread];
    if (!engine) engine = std::make_unique<Engine<Nim>>(engine_config(config, max_size));
    std::vector<HeapSize> tuple(max_heaps, 0);
    tuple[0] = top;
    // Odometer over the remaining positions, each <= its predecessor.
    while (true) {
      const auto p = NimPosition::canonical(tuple);
      const bool engine_p = engine->classify(p) == Outcome::P;
      const bool bouton_p = bouton_is_p(p.heaps);
      ++counts[top];
      if (engine_p != bouton_p) {
        rows[top].push_back({to_string(p), bouton_p ? "P" : "N", engine_p ? "P" : "N"});
      }
      std::size_t i = max_heaps;
      while (i > 1 && tuple[i - 1] == tuple[i - 2]) --i;
      if (i == 1) break;
      ++tuple[i - 1];
      std::fill(tuple.begin() + i, tuple.end(), 0);
    }
  });

  r.mismatches = merge_mismatches(std::move(rows));
  for (auto c : counts) r.positions_checked += c;
  r.elapsed_ms = ms_since(start);
  return r;
}

namespace {

std::vector<Mismatch> proof_step_mismatches(HeapSize x, HeapSize y) {
  std::vector<Mismatch> out;
  const auto here = pos_text(x, y);
  const unsigned h = delete_nim_grundy(x, y);
  const auto options = delete_nim_options(DeleteNimPosition::canonical(x, y), enumeration_limit(std::max(x, y)));

  for (const auto& q : options) {
    if (delete_nim_grundy(q.x, q.y) == h) {
      out.push_back({here, "no option with value " + std::to_string(h),
                     "option " + to_string(q) + " has value " + std::to_string(h)});
    }
  }

  for (unsigned hp = 0; hp < h; ++hp) {
    const HeapSize step = HeapSize{1} << hp;
    HeapSize chosen = 0;
    if (x & step) {
      chosen = x;
    } else if (y & step) {
      chosen = y;
    } else {
      out.push_back({here, "bit " + std::to_string(hp) + " set in x or y", "neither heap has it"});
      continue;
    }
    const auto built = DeleteNimPosition::canonical(chosen - step, step - 1);
    if (!std::binary_search(options.begin(), options.end(), built)) {
      out.push_back({here, "constructed " + to_string(built) + " is an option", "not an option"});
      continue;
    }
    const unsigned got = delete_nim_grundy(built.x, built.y);
    if (got != hp) {
      out.push_back({here, "constructed " + to_string(built) + " has value " + std::to_string(hp),
                     std::to_string(got)});
    }
  }
  return out;
}

}  // namespace

VerificationReport verify_proof_steps(HeapSize x, HeapSize y) {
  const auto start = Clock::now();
  VerificationReport r;
  r.check = "proof-steps";
  r.parameters = "position=" + pos_text(x, y);
  r.bound = std::max(x, y);
  r.positions_checked = 1;
  r.mismatches = proof_step_mismatches(x, y);
  r.elapsed_ms = ms_since(start);
  return r;
}

VerificationReport verify_proof_steps_sweep(HeapSize bound, const SweepConfig& config) {
  const auto start = Clock::now();
  VerificationReport r;
  r.check = "proof-steps";
  r.bound = bound;
  std::vector<std::vector<Mismatch>> rows(bound + 1);
  parallel_rows(0, static_cast<std::int64_t>(bound) + 1, resolve_workers(config.workers),
                [&](std::int64_t x, int) {
                  for (HeapSize y = 0; y <= static_cast<HeapSize>(x); ++y) {
                    auto m = proof_step_mismatches(x, y);
                    rows[x].insert(rows[x].end(), m.begin(), m.end());
                  }
                });
  r.mismatches = merge_mismatches(std::move(rows));
  r.positions_checked = triangle_count(0, bound);
  r.elapsed_ms = ms_since(start);
  return r;
}

VerificationReport verify_sum_theorem(HeapSize bound, const SweepConfig& config) {
  const auto start = Clock::now();
  VerificationReport r;
  r.check = "sum-theorem";
  r.bound = bound;
  const int workers = resolve_workers(config.workers);

  std::vector<AnyPosition> positions;
  for (HeapSize x = 0; x <= bound; ++x) {
    for (HeapSize y = 0; y <= x; ++y) positions.emplace_back(DeleteNimPosition{x, y});
  }

  struct Engines {
    Engine<SumGame> sums;
    Engine<AnyGame> components;
  };
  std::vector<std::unique_ptr<Engines>> engines(workers);
  std::vector<std::vector<Mismatch>> rows(positions.size());

  parallel_rows(0, static_cast<std::int64_t>(positions.size()), workers, [&](std::int64_t i, int thread) {
    auto& e = engines[thread];
    if (!e) {
      const auto ec = engine_config(config, bound);
      e = std::make_unique<Engines>(Engines{Engine<SumGame>(ec), Engine<AnyGame>(ec)});
    }
    for (const auto& h : positions) {
      const auto s = sum_grundy(e->sums, e->components, positions[i], h);
      if (!s.equal()) {
        rows[i].push_back({to_string(SumPosition{positions[i], h}), std::to_string(s.xor_of_parts()),
                           std::to_string(s.direct)});
      }
    }
  });

  r.mismatches = merge_mismatches(std::move(rows));
  r.positions_checked = positions.size() * positions.size();
  r.elapsed_ms = ms_since(start);
  return r;
}

VerificationReport verify_isomorphism(HeapSize bound, const SweepConfig& config) {
  const auto start = Clock::now();
  VerificationReport r;
  r.check = "isomorphism";
  r.parameters = "options+grundy";
  r.bound = bound;

  const auto iso = check_isomorphism(bound, config.workers);
  for (const auto& f : iso.failures) {
    r.mismatches.push_back({to_string(f.position), "F(options) = options(F)", f.reason});
  }

  Engine<Vdn> vdn(engine_config(config, bound));
  Engine<DeleteNim> del(engine_config(config, bound));
  for (HeapSize x = 1; x <= bound; ++x) {
    for (HeapSize y = 1; y <= x; ++y) {
      const VdnPosition p{x, y};
      const auto lhs = vdn.grundy(p);
      const auto rhs = del.grundy(vdn_to_delete(p));
      if (lhs != rhs) {
        r.mismatches.push_back({to_string(p), "G_delete(F(p))=" + std::to_string(rhs),
                                "G_vdn(p)=" + std::to_string(lhs)});
      }
    }
  }
  // Option failures come first; keep a single canonical order.
  std::stable_sort(r.mismatches.begin(), r.mismatches.end(), [](const Mismatch& a, const Mismatch& b) {
    const auto pa = parse_vdn(a.position), pb = parse_vdn(b.position);
    return pa < pb;
  });
  r.positions_checked = triangle_count(1, bound);
  r.elapsed_ms = ms_since(start);
  return r;
}

namespace {

/// Engine to move at `p`. True iff always playing best_move wins against
/// every reply sequence. Results are cached per position.
bool engine_wins(Engine<DeleteNim>& engine, std::unordered_map<DeleteNimPosition, bool>& cache,
                 const DeleteNimPosition& p) {
  if (auto it = cache.find(p); it != cache.end()) return it->second;
  bool wins = false;
  if (const auto move = engine.best_move(p); move && engine.classify(*move) == Outcome::P) {
    wins = true;
    for (const auto& reply : engine.options(*move)) {
      if (!engine_wins(engine, cache, reply)) {
        wins = false;
        break;
      }
    }
  }
  cache.emplace(p, wins);
  return wins;
}

}  // namespace

VerificationReport verify_optimal_play(HeapSize bound, const SweepConfig& config) {
  const auto start = Clock::now();
  VerificationReport r;
  r.check = "optimal-play";
  r.bound = bound;
  const int workers = resolve_workers(config.workers);

  struct State {
    Engine<DeleteNim> engine;
    std::unordered_map<DeleteNimPosition, bool> cache;
  };
  std::vector<std::unique_ptr<State>> states(workers);
  std::vector<std::vector<Mismatch>> rows(bound + 1);

  parallel_rows(0, static_cast<std::int64_t>(bound) + 1, workers, [&](std::int64_t x, int thread) {
    auto& s = states[thread];
    if (!s) s = std::make_unique<State>(State{Engine<DeleteNim>(engine_config(config, bound)), {}});
    for (HeapSize y = 0; y <= static_cast<HeapSize>(x); ++y) {
      const DeleteNimPosition p{static_cast<HeapSize>(x), y};
      const bool is_n = s->engine.classify(p) == Outcome::N;
      const bool has_move = s->engine.best_move(p).has_value();
      if (is_n != has_move) {
        rows[x].push_back({to_string(p), is_n ? "best move" : "no best move",
                           has_move ? "best move" : "no best move"});
      } else if (is_n && !engine_wins(s->engine, s->cache, p)) {
        rows[x].push_back({to_string(p), "engine wins", "opponent has a winning reply line"});
      }
    }
  });

  r.mismatches = merge_mismatches(std::move(rows));
  r.positions_checked = triangle_count(0, bound);
  r.elapsed_ms = ms_since(start);
  return r;
}

VerificationReport verify_traversal_order(HeapSize bound, const std::vector<std::uint64_t>& seeds,
                                          const SweepConfig& config) {
  const auto start = Clock::now();
  VerificationReport r;
  r.check = "traversal-order";
  r.bound = bound;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    r.parameters += (i ? "," : "seeds=") + std::to_string(seeds[i]);
  }

  // Largest positions first, so each shuffled run discovers the graph
  // through its own randomized depth-first order.
  auto evaluate = [&](Engine<DeleteNim>& engine) {
    dense::GrundyGrid grid(bound);
    for (HeapSize x = bound + 1; x-- > 0;) {
      for (HeapSize y = x + 1; y-- > 0;) grid.set(x, y, engine.grundy({x, y}));
    }
    return grid;
  };

  Engine<DeleteNim> plain(engine_config(config, bound));
  const auto baseline = evaluate(plain);

  std::vector<std::vector<Mismatch>> per_seed(seeds.size());
  parallel_rows(0, static_cast<std::int64_t>(seeds.size()), resolve_workers(config.workers),
                [&](std::int64_t i, int) {
                  auto ec = engine_config(config, bound);
                  ec.shuffle_seed = seeds[i];
                  Engine<DeleteNim> shuffled(ec);
                  const auto grid = evaluate(shuffled);
                  for (HeapSize x = 0; x <= bound; ++x) {
                    for (HeapSize y = 0; y <= x; ++y) {
                      if (grid.at(x, y) != baseline.at(x, y)) {
                        per_seed[i].push_back({pos_text(x, y) + " seed=" + std::to_string(seeds[i]),
                                               std::to_string(baseline.at(x, y)),
                                               std::to_string(grid.at(x, y))});
                      }
                    }
                  }
                });

  r.mismatches = merge_mismatches(std::move(per_seed));
  r.positions_checked = triangle_count(0, bound);
  r.elapsed_ms = ms_since(start);
  return r;
}

}  // namespace sg
