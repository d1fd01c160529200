#include "sg/rulesets.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace sg {

namespace {

void check_heap(HeapSize h, HeapSize max_heap) {
  if (h > max_heap) {
    throw DomainError("heap " + std::to_string(h) + " exceeds enumeration limit " +
                      std::to_string(max_heap));
  }
}

template <class T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<HeapSize> parse_exactly_two(std::string_view text, std::string_view game) {
  auto heaps = parse_heaps(text);
  if (heaps.size() != 2) {
    throw ParseError(std::string(game) + " position needs exactly two heaps `x,y`, got '" +
                     std::string(text) + "'");
  }
  return heaps;
}

}  // namespace

VdnPosition VdnPosition::canonical(HeapSize a, HeapSize b) {
  if (a == 0 || b == 0) throw DomainError("VDN heaps must be at least 1");
  return a >= b ? VdnPosition{a, b} : VdnPosition{b, a};
}

NimPosition NimPosition::canonical(std::vector<HeapSize> heaps) {
  std::erase(heaps, HeapSize{0});
  std::sort(heaps.begin(), heaps.end(), std::greater<>{});
  return NimPosition{std::move(heaps)};
}

std::vector<DeleteNimPosition> delete_nim_options(const DeleteNimPosition& p, HeapSize max_heap) {
  check_heap(p.x, max_heap);
  check_heap(p.y, max_heap);
  std::vector<DeleteNimPosition> out;
  // Keep one heap, drop the other, take a stone, split the rest as (a, s-a).
  auto add_splits = [&](HeapSize kept) {
    if (kept == 0) return;
    const HeapSize s = kept - 1;
    for (HeapSize b = 0; b <= s / 2; ++b) out.push_back({s - b, b});
  };
  add_splits(p.x);
  if (p.y != p.x) add_splits(p.y);
  sort_unique(out);
  return out;
}

std::vector<VdnPosition> vdn_options(const VdnPosition& p, HeapSize max_heap) {
  if (p.x == 0 || p.y == 0) throw DomainError("VDN heaps must be at least 1");
  check_heap(p.x, max_heap);
  check_heap(p.y, max_heap);
  std::vector<VdnPosition> out;
  auto add_splits = [&](HeapSize kept) {
    for (HeapSize b = 1; b <= kept / 2; ++b) out.push_back({kept - b, b});
  };
  add_splits(p.x);
  if (p.y != p.x) add_splits(p.y);
  sort_unique(out);
  return out;
}

std::vector<NimPosition> nim_options(const NimPosition& p, HeapSize max_heap) {
  for (auto h : p.heaps) check_heap(h, max_heap);
  std::vector<NimPosition> out;
  for (std::size_t i = 0; i < p.heaps.size(); ++i) {
    if (i > 0 && p.heaps[i] == p.heaps[i - 1]) continue;  // same multiset of options
    for (HeapSize v = 0; v < p.heaps[i]; ++v) {
      auto next = p.heaps;
      next[i] = v;
      out.push_back(NimPosition::canonical(std::move(next)));
    }
  }
  sort_unique(out);
  return out;
}

std::vector<AnyPosition> any_options(const AnyPosition& p, HeapSize max_heap) {
  return std::visit(
      [max_heap](const auto& pos) {
        using P = std::decay_t<decltype(pos)>;
        std::vector<P> opts;
        if constexpr (std::is_same_v<P, DeleteNimPosition>) {
          opts = delete_nim_options(pos, max_heap);
        } else if constexpr (std::is_same_v<P, VdnPosition>) {
          opts = vdn_options(pos, max_heap);
        } else {
          opts = nim_options(pos, max_heap);
        }
        return std::vector<AnyPosition>(std::make_move_iterator(opts.begin()),
                                        std::make_move_iterator(opts.end()));
      },
      p);
}

std::vector<SumPosition> sum_options(const SumPosition& p, HeapSize max_heap) {
  std::vector<SumPosition> out;
  for (auto& g : any_options(p.left, max_heap)) out.push_back({std::move(g), p.right});
  for (auto& h : any_options(p.right, max_heap)) out.push_back({p.left, std::move(h)});
  sort_unique(out);
  return out;
}

bool is_terminal(const AnyPosition& p) {
  return std::visit([](const auto& pos) { return pos.terminal(); }, p);
}

std::vector<HeapSize> parse_heaps(std::string_view text) {
  text = trim(text);
  if (text.empty() || text == "()") return {};
  std::vector<HeapSize> heaps;
  while (true) {
    const auto comma = text.find(',');
    const auto field = trim(text.substr(0, comma));
    HeapSize value = 0;
    const auto* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (field.empty() || ec != std::errc{} || ptr != end) {
      throw ParseError("bad heap size '" + std::string(field) + "'");
    }
    heaps.push_back(value);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return heaps;
}

DeleteNimPosition parse_delete_nim(std::string_view text) {
  const auto h = parse_exactly_two(text, "delete-nim");
  return DeleteNimPosition::canonical(h[0], h[1]);
}

VdnPosition parse_vdn(std::string_view text) {
  const auto h = parse_exactly_two(text, "vdn");
  if (h[0] == 0 || h[1] == 0) {
    throw ParseError("vdn heaps must be at least 1, got '" + std::string(text) + "'");
  }
  return VdnPosition::canonical(h[0], h[1]);
}

NimPosition parse_nim(std::string_view text) { return NimPosition::canonical(parse_heaps(text)); }

std::string to_string(const DeleteNimPosition& p) {
  return std::to_string(p.x) + "," + std::to_string(p.y);
}

std::string to_string(const VdnPosition& p) {
  return std::to_string(p.x) + "," + std::to_string(p.y);
}

std::string to_string(const NimPosition& p) {
  if (p.heaps.empty()) return "()";
  std::ostringstream os;
  for (std::size_t i = 0; i < p.heaps.size(); ++i) os << (i ? "," : "") << p.heaps[i];
  return os.str();
}

std::string to_string(const AnyPosition& p) {
  return std::visit(
      [](const auto& pos) {
        using P = std::decay_t<decltype(pos)>;
        std::string tag = std::is_same_v<P, DeleteNimPosition> ? "delete-nim"
                          : std::is_same_v<P, VdnPosition>     ? "vdn"
                                                               : "nim";
        return tag + "(" + to_string(pos) + ")";
      },
      p);
}

std::string to_string(const SumPosition& p) { return to_string(p.left) + " + " + to_string(p.right); }

}  // namespace sg
