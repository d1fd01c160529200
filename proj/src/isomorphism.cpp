#include "sg/isomorphism.hpp"

#include <omp.h>

#include <algorithm>
#include <optional>

namespace sg {

DeleteNimPosition vdn_to_delete(const VdnPosition& p) {
  if (p.x == 0 || p.y == 0) throw DomainError("not a VDN position: " + to_string(p));
  return DeleteNimPosition::canonical(p.x - 1, p.y - 1);
}

VdnPosition delete_to_vdn(const DeleteNimPosition& p) { return VdnPosition::canonical(p.x + 1, p.y + 1); }

namespace {

std::string describe(const std::vector<DeleteNimPosition>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
  return s + "}";
}

std::optional<std::string> compare_at(const VdnPosition& p, HeapSize limit) {
  std::vector<DeleteNimPosition> image;
  for (const auto& q : vdn_options(p, limit)) image.push_back(vdn_to_delete(q));
  std::sort(image.begin(), image.end());
  const auto target = delete_nim_options(vdn_to_delete(p), limit);
  if (image == target) return std::nullopt;
  return "F(options)=" + describe(image) + " options(F)=" + describe(target);
}

}  // namespace

IsoCheckResult check_isomorphism(HeapSize bound, int workers) {
  IsoCheckResult result;
  result.bound = bound;
  if (bound == 0) return result;
  const int threads = workers > 0 ? workers : omp_get_max_threads();
  const auto n = static_cast<std::int64_t>(bound);
  const HeapSize limit = std::max(bound, kDefaultMaxHeap);

  std::vector<std::vector<IsoFailure>> rows(bound + 1);
#pragma omp parallel for num_threads(threads) schedule(dynamic, 4)
  for (std::int64_t x = 1; x <= n; ++x) {
    for (std::int64_t y = 1; y <= x; ++y) {
      const VdnPosition p{static_cast<HeapSize>(x), static_cast<HeapSize>(y)};
      if (auto why = compare_at(p, limit)) rows[x].push_back({p, std::move(*why)});
    }
  }
  for (auto& row : rows) {
    result.failures.insert(result.failures.end(), std::make_move_iterator(row.begin()),
                           std::make_move_iterator(row.end()));
  }
  result.positions_checked = bound * (bound + 1) / 2;
  return result;
}

}  // namespace sg
