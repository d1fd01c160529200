#include "sg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sg/closed_forms.hpp"
#include "sg/dense.hpp"
#include "sg/engine.hpp"
#include "sg/verification.hpp"

namespace sg::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string game = "delete-nim";
  std::string position;
  std::string format = "text";
  std::string engine = "dense";
  int workers = 0;
  std::size_t budget = kDefaultPositionBudget;
  HeapSize max_heap = kDefaultMaxHeap;
};

void check_heaps(std::span<const HeapSize> heaps, HeapSize max_heap) {
  for (auto h : heaps) {
    if (h > max_heap) {
      throw ResourceBudgetExceeded("heap " + std::to_string(h) + " exceeds --max-heap " +
                                   std::to_string(max_heap));
    }
  }
}

dense::KernelConfig kernel(const Common& c) { return {c.workers, c.budget}; }

EngineConfig engine_config(const Common& c) {
  EngineConfig ec;
  ec.position_budget = c.budget;
  ec.max_heap = c.max_heap;
  return ec;
}

// ---------------------------------------------------------------- grundy

struct GrundyResult {
  std::string position;
  std::optional<std::uint64_t> closed_form;
  GrundyValue engine = 0;
};

template <class R>
GrundyValue engine_value(const Common& c, const typename R::Position& p) {
  if (c.engine == "generic") return Engine<R>(engine_config(c)).grundy(p);
  return dense::DenseEngine<R>(kernel(c)).grundy(p);
}

GrundyResult evaluate(const Common& c) {
  GrundyResult r;
  if (c.game == "delete-nim") {
    const auto p = parse_delete_nim(c.position);
    check_heaps(std::array{p.x, p.y}, c.max_heap);
    r = {to_string(p), delete_nim_grundy(p.x, p.y), engine_value<DeleteNim>(c, p)};
  } else if (c.game == "vdn") {
    const auto p = parse_vdn(c.position);
    check_heaps(std::array{p.x, p.y}, c.max_heap);
    r = {to_string(p), vdn_grundy(p.x, p.y), engine_value<Vdn>(c, p)};
  } else {
    const auto p = parse_nim(c.position);
    check_heaps(p.heaps, c.max_heap);
    r = {to_string(p), nim_sum(p.heaps), Engine<Nim>(engine_config(c)).grundy(p)};
  }
  return r;
}

int cmd_grundy(const Common& c, std::ostream& out) {
  const auto r = evaluate(c);
  const bool agree = !r.closed_form || *r.closed_form == r.engine;
  const char* outcome = r.engine == 0 ? "P" : "N";
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["game"] = c.game;
    j["position"] = r.position;
    j["closed_form"] = *r.closed_form;
    j["engine"] = r.engine;
    j["outcome"] = outcome;
    j["agree"] = agree;
    out << j.dump() << "\n";
  } else if (c.format == "csv") {
    out << "game,position,closed_form,engine,outcome\n"
        << c.game << ",\"" << r.position << "\"," << *r.closed_form << "," << r.engine << "," << outcome
        << "\n";
  } else {
    out << "game: " << c.game << "\n"
        << "position: " << r.position << "\n"
        << "closed-form: " << *r.closed_form << "\n"
        << "engine: " << r.engine << "\n"
        << "outcome: " << outcome << "-position\n";
    if (!agree) out << "DISAGREEMENT between closed form and engine\n";
  }
  return agree ? kOk : kDisagreement;
}

// ---------------------------------------------------------------- table

int cmd_table(const Common& c, HeapSize bound, const std::string& source, const std::string& output,
              std::ostream& out) {
  if (c.game == "nim") throw UsageError("table needs a two-heap game (delete-nim or vdn)");
  const bool vdn = c.game == "vdn";
  if (vdn && bound < 1) throw UsageError("vdn table bound must be at least 1");
  const HeapSize lo = vdn ? 1 : 0;
  const HeapSize side = bound - lo + 1;
  if (bound >= (HeapSize{1} << 32) || side * side > c.budget) {
    throw ResourceBudgetExceeded("table of " + std::to_string(side) + "^2 cells exceeds --budget");
  }

  std::optional<dense::GrundyGrid> grid;
  if (source == "engine") grid = vdn ? dense::solve_vdn(bound, kernel(c)) : dense::solve_delete_nim(bound, kernel(c));
  auto value = [&](HeapSize x, HeapSize y) -> GrundyValue {
    if (grid) return grid->at(x, y);
    return vdn ? vdn_grundy(x, y) : delete_nim_grundy(x, y);
  };

  std::ofstream file;
  if (!output.empty()) {
    file.open(output);
    if (!file) throw UsageError("cannot open output file '" + output + "'");
  }
  std::ostream& os = output.empty() ? out : file;

  if (c.format == "csv") {
    os << "x,y,grundy\n";
    for (HeapSize x = lo; x <= bound; ++x) {
      for (HeapSize y = lo; y <= bound; ++y) os << x << "," << y << "," << value(x, y) << "\n";
    }
  } else if (c.format == "json") {
    auto rows = nlohmann::ordered_json::array();
    for (HeapSize x = lo; x <= bound; ++x) {
      for (HeapSize y = lo; y <= bound; ++y) rows.push_back({{"x", x}, {"y", y}, {"grundy", value(x, y)}});
    }
    os << rows.dump() << "\n";
  } else {
    const int w = static_cast<int>(std::to_string(bound).size()) + 1;
    os << std::setw(w) << "x\\y";
    for (HeapSize y = lo; y <= bound; ++y) os << std::setw(w) << y;
    os << "\n";
    for (HeapSize x = lo; x <= bound; ++x) {
      os << std::setw(w) << x;
      for (HeapSize y = lo; y <= bound; ++y) os << std::setw(w) << value(x, y);
      os << "\n";
    }
  }
  return kOk;
}

// ---------------------------------------------------------------- best-move

template <class EngineT, class Position>
int print_best_move(EngineT& engine, const Position& p, const Common& c, std::ostream& out) {
  const auto move = engine.best_move(p);
  const bool terminal = engine.options(p).empty();
  std::string text = move ? to_string(*move) : terminal ? "P-position (terminal)" : "P-position";
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["game"] = c.game;
    j["position"] = to_string(p);
    j["best_move"] = move ? nlohmann::ordered_json(to_string(*move)) : nlohmann::ordered_json(nullptr);
    j["outcome"] = move ? "N" : "P";
    j["terminal"] = terminal;
    out << j.dump() << "\n";
  } else {
    out << text << "\n";
  }
  return kOk;
}

int cmd_best_move(const Common& c, std::ostream& out) {
  if (c.game == "delete-nim") {
    const auto p = parse_delete_nim(c.position);
    check_heaps(std::array{p.x, p.y}, c.max_heap);
    dense::DenseEngine<DeleteNim> engine(kernel(c));
    return print_best_move(engine, p, c, out);
  }
  if (c.game == "vdn") {
    const auto p = parse_vdn(c.position);
    check_heaps(std::array{p.x, p.y}, c.max_heap);
    dense::DenseEngine<Vdn> engine(kernel(c));
    return print_best_move(engine, p, c, out);
  }
  const auto p = parse_nim(c.position);
  check_heaps(p.heaps, c.max_heap);
  Engine<Nim> engine(engine_config(c));
  return print_best_move(engine, p, c, out);
}

// ---------------------------------------------------------------- play

template <class EngineT, class Position, class Parse>
int play_session(EngineT& engine, Position pos, bool engine_first, Parse parse, std::istream& in,
                 std::ostream& out) {
  bool engine_to_move = engine_first;
  out << "start " << to_string(pos) << ", " << (engine_first ? "engine" : "you") << " to move\n";
  while (true) {
    const auto options = engine.options(pos);
    if (options.empty()) {
      out << "position " << to_string(pos) << " is terminal: "
          << (engine_to_move ? "you win" : "engine wins") << "\n";
      return kOk;
    }
    if (engine_to_move) {
      // From a P-position no winning move exists; take the smallest option.
      pos = engine.best_move(pos).value_or(options.front());
      out << "engine plays " << to_string(pos) << "\n";
      engine_to_move = false;
      continue;
    }
    out << "position " << to_string(pos) << ", your move> " << std::flush;
    std::string line;
    if (!std::getline(in, line)) {
      out << "\naborted\n";
      return kAborted;
    }
    Position move;
    try {
      move = parse(line);
    } catch (const std::exception& e) {
      out << "invalid move: " << e.what() << "\n";
      continue;
    }
    if (!std::binary_search(options.begin(), options.end(), move)) {
      out << "illegal move " << to_string(move) << "\n";
      continue;
    }
    pos = move;
    engine_to_move = true;
  }
}

int cmd_play(const Common& c, const std::string& first, std::istream& in, std::ostream& out) {
  const bool engine_first = first == "engine";
  if (c.game == "delete-nim") {
    const auto p = parse_delete_nim(c.position);
    check_heaps(std::array{p.x, p.y}, c.max_heap);
    dense::DenseEngine<DeleteNim> engine(kernel(c));
    return play_session(engine, p, engine_first, parse_delete_nim, in, out);
  }
  if (c.game == "vdn") {
    const auto p = parse_vdn(c.position);
    check_heaps(std::array{p.x, p.y}, c.max_heap);
    dense::DenseEngine<Vdn> engine(kernel(c));
    return play_session(engine, p, engine_first, parse_vdn, in, out);
  }
  const auto p = parse_nim(c.position);
  check_heaps(p.heaps, c.max_heap);
  Engine<Nim> engine(engine_config(c));
  return play_session(engine, p, engine_first, parse_nim, in, out);
}

// ---------------------------------------------------------------- verify

const std::vector<std::string> kChecks = {"delete-nim", "vdn", "iso", "bouton", "sum", "proof", "play", "order"};

struct VerifyArgs {
  std::vector<std::string> checks;
  bool all = false;
  std::optional<HeapSize> bound;
  std::string config_file;
  bool no_timing = false;
  // Explicit per-check flags; unset means config file or default.
  std::map<std::string, HeapSize> explicit_bounds;
};

SweepBounds load_bounds(const std::string& path) {
  SweepBounds b;
  if (path.empty()) return b;
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read config file '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad config file: ") + e.what());
  }
  const auto& bounds = j.contains("bounds") ? j.at("bounds") : j;
  auto read = [&](const char* key, HeapSize& slot) {
    if (bounds.contains(key)) slot = bounds.at(key).get<HeapSize>();
  };
  read("delete-nim", b.delete_nim);
  read("vdn", b.vdn);
  read("iso", b.isomorphism);
  read("bouton-heaps", b.bouton_heaps);
  read("bouton-size", b.bouton_size);
  read("sum", b.sum);
  read("proof", b.proof);
  read("play", b.play);
  read("order", b.order);
  return b;
}

int cmd_verify(const Common& c, const VerifyArgs& v, std::ostream& out) {
  auto bounds = load_bounds(v.config_file);
  const std::map<std::string, HeapSize*> slots = {
      {"delete-nim", &bounds.delete_nim}, {"vdn", &bounds.vdn},     {"iso", &bounds.isomorphism},
      {"heaps", &bounds.bouton_heaps},    {"size", &bounds.bouton_size}, {"sum", &bounds.sum},
      {"proof", &bounds.proof},           {"play", &bounds.play},   {"order", &bounds.order}};
  for (const auto& [key, value] : v.explicit_bounds) *slots.at(key) = value;

  std::vector<std::string> selected = v.all || v.checks.empty() ? kChecks : v.checks;
  if (v.bound) {
    if (v.checks.size() != 1) throw UsageError("--bound needs exactly one --check");
    const auto& name = v.checks.front();
    *slots.at(name == "bouton" ? "size" : name) = *v.bound;
  }

  SweepConfig sc;
  sc.workers = c.workers;
  sc.position_budget = c.budget;
  sc.backend = c.engine == "generic" ? Backend::generic : Backend::dense;

  std::vector<VerificationReport> reports;
  for (const auto& name : kChecks) {
    if (std::find(selected.begin(), selected.end(), name) == selected.end()) continue;
    if (name == "delete-nim") reports.push_back(verify_delete_nim_formula(bounds.delete_nim, sc));
    if (name == "vdn") reports.push_back(verify_vdn_formula(bounds.vdn, sc));
    if (name == "iso") reports.push_back(verify_isomorphism(bounds.isomorphism, sc));
    if (name == "bouton") reports.push_back(verify_bouton(bounds.bouton_heaps, bounds.bouton_size, sc));
    if (name == "sum") reports.push_back(verify_sum_theorem(bounds.sum, sc));
    if (name == "proof") reports.push_back(verify_proof_steps_sweep(bounds.proof, sc));
    if (name == "play") reports.push_back(verify_optimal_play(bounds.play, sc));
    if (name == "order") reports.push_back(verify_traversal_order(bounds.order, {1, 2, 3}, sc));
  }

  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  if (c.format == "json") {
    out << to_json(reports, !v.no_timing) << "\n";
  } else {
    for (const auto& r : reports) write_text(out, r, !v.no_timing);
    out << (ok ? "all checks passed" : "verification FAILED") << "\n";
  }
  return ok ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sprague-Grundy toolkit for Delete Nim, VDN and Nim"};
  app.name("sg");
  app.require_subcommand(1);

  Common common;
  const std::vector<std::string> games = {"delete-nim", "vdn", "nim"};
  auto add_game = [&](CLI::App* sub, bool position_required) {
    sub->add_option("--game,-g", common.game, "Ruleset")->check(CLI::IsMember(games))->required();
    auto* opt = sub->add_option("--position,-p", common.position, "Position, e.g. 3,2");
    if (position_required) opt->required();
    sub->add_option("--max-heap", common.max_heap, "Largest heap accepted")->capture_default_str();
  };
  auto add_engine = [&](CLI::App* sub) {
    sub->add_option("--engine", common.engine, "Brute-force backend")
        ->check(CLI::IsMember({"dense", "generic"}))
        ->capture_default_str();
    sub->add_option("--budget", common.budget, "Position budget for the engine")->capture_default_str();
    sub->add_option("--workers,-j", common.workers, "Worker threads (0 = all)")->check(CLI::NonNegativeNumber);
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--format,-f", common.format, "Output format")
        ->check(CLI::IsMember(std::move(formats)))
        ->capture_default_str();
  };

  auto* grundy = app.add_subcommand("grundy", "Closed-form and engine Grundy value of a position");
  add_game(grundy, true);
  add_engine(grundy);
  add_format(grundy, {"text", "csv", "json"});

  HeapSize table_bound = 0;
  std::string table_source = "formula";
  std::string table_output;
  auto* table = app.add_subcommand("table", "Grundy grid for a two-heap game");
  add_game(table, false);
  add_engine(table);
  add_format(table, {"text", "csv", "json"});
  table->add_option("--bound,-b", table_bound, "Largest heap in the grid")->required();
  table->add_option("--source", table_source, "Value source")
      ->check(CLI::IsMember({"formula", "engine"}))
      ->capture_default_str();
  table->add_option("--output,-o", table_output, "Write to file instead of stdout");

  auto* best = app.add_subcommand("best-move", "Winning move, or report a P-position");
  add_game(best, true);
  add_engine(best);
  add_format(best, {"text", "json"});

  std::string first = "human";
  auto* play = app.add_subcommand("play", "Play against the engine on stdin/stdout");
  add_game(play, true);
  add_engine(play);
  play->add_option("--first", first, "Who moves first")->check(CLI::IsMember({"human", "engine"}))
      ->capture_default_str();

  VerifyArgs va;
  std::map<std::string, HeapSize> flag_values;
  std::map<std::string, CLI::Option*> flag_opts;
  auto* verify = app.add_subcommand("verify", "Exhaustive oracle checks");
  add_engine(verify);
  add_format(verify, {"text", "json"});
  verify->add_flag("--all", va.all, "Run every check");
  verify->add_option("--check,-c", va.checks, "Check to run (repeatable)")->check(CLI::IsMember(kChecks));
  verify->add_option("--bound,-b", va.bound, "Bound for the single selected check");
  verify->add_option("--config", va.config_file, "JSON file with default bounds");
  verify->add_flag("--no-timing", va.no_timing, "Omit elapsed times");
  for (const auto& [flag, key] : std::vector<std::pair<std::string, std::string>>{
           {"--bound-delete-nim", "delete-nim"}, {"--bound-vdn", "vdn"}, {"--bound-iso", "iso"},
           {"--heaps", "heaps"}, {"--size", "size"}, {"--bound-sum", "sum"}, {"--bound-proof", "proof"},
           {"--bound-play", "play"}, {"--bound-order", "order"}}) {
    flag_opts[key] = verify->add_option(flag, flag_values[key], "Bound for the " + key + " check");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  for (const auto& [key, opt] : flag_opts) {
    if (opt->count() > 0) va.explicit_bounds[key] = flag_values[key];
  }

  try {
    if (grundy->parsed()) return cmd_grundy(common, out);
    if (table->parsed()) return cmd_table(common, table_bound, table_source, table_output, out);
    if (best->parsed()) return cmd_best_move(common, out);
    if (play->parsed()) return cmd_play(common, first, in, out);
    if (verify->parsed()) return cmd_verify(common, va, out);
  } catch (const ResourceBudgetExceeded& e) {
    err << "resource budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "invalid position: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace sg::cli
