#pragma once

#include <string>
#include <vector>

#include "sg/rulesets.hpp"

namespace sg {

/// F((x,y)) = (x-1, y-1). Throws DomainError for a zero heap.
DeleteNimPosition vdn_to_delete(const VdnPosition& p);

/// Inverse of vdn_to_delete: (x+1, y+1).
VdnPosition delete_to_vdn(const DeleteNimPosition& p);

struct IsoFailure {
  VdnPosition position;
  std::string reason;
};

struct IsoCheckResult {
  HeapSize bound = 0;
  std::uint64_t positions_checked = 0;
  std::vector<IsoFailure> failures;  // ascending canonical order

  bool passed() const { return failures.empty(); }
};

/// For every VDN position 1 <= y <= x <= bound, checks that F maps the VDN
/// option set onto the Delete Nim option set of F(position).
IsoCheckResult check_isomorphism(HeapSize bound, int workers = 0);

}  // namespace sg
