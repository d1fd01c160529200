#include "sg/engine.hpp"

#include <chrono>

namespace sg {

GrundyValue mex(std::span<const GrundyValue> values) {
  // mex(S) <= |S|, so only values below |S| + 1 matter.
  std::vector<bool> seen(values.size() + 1, false);
  for (auto v : values) {
    if (v < seen.size()) seen[v] = true;
  }
  GrundyValue m = 0;
  while (seen[m]) ++m;
  return m;
}

SumGrundy sum_grundy(Engine<SumGame>& sums, Engine<AnyGame>& components, const AnyPosition& g,
                     const AnyPosition& h) {
  return SumGrundy{sums.grundy(SumPosition{g, h}), components.grundy(g), components.grundy(h)};
}

SumGrundy sum_grundy(const AnyPosition& g, const AnyPosition& h, const EngineConfig& config) {
  Engine<SumGame> sums(config);
  Engine<AnyGame> components(config);
  return sum_grundy(sums, components, g, h);
}

VerificationReport sum_grundy_check(const AnyPosition& g, const AnyPosition& h,
                                    const EngineConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const auto s = sum_grundy(g, h, config);
  VerificationReport r;
  r.check = "sum-grundy";
  r.parameters = to_string(SumPosition{g, h});
  r.positions_checked = 1;
  if (!s.equal()) {
    r.mismatches.push_back(
        {to_string(SumPosition{g, h}), std::to_string(s.xor_of_parts()), std::to_string(s.direct)});
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace sg
