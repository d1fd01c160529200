#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace sg {

struct Mismatch {
  std::string position;
  std::string expected;
  std::string actual;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

/// Outcome of one exhaustive check. `passed()` is derived: a report passes
/// exactly when it recorded no mismatch.
struct VerificationReport {
  std::string check;
  std::string parameters;  // free-form, e.g. "heaps=3,size=16"
  std::uint64_t bound = 0;
  std::uint64_t positions_checked = 0;
  std::vector<Mismatch> mismatches;
  double elapsed_ms = 0.0;

  bool passed() const { return mismatches.empty(); }
};

/// Concatenates per-partition mismatch lists in partition order. Sweeps
/// partition by ascending canonical position, so the merged list is in
/// canonical order regardless of how many workers produced it.
std::vector<Mismatch> merge_mismatches(std::vector<std::vector<Mismatch>> parts);

// Line-oriented form:
//   PASS delete-nim-formula bound=64 checked=2145 mismatches=0 elapsed_ms=1.2
//     mismatch 3,2 expected=2 actual=1
// `with_timing = false` drops the elapsed field for byte-stable output.
void write_text(std::ostream& os, const VerificationReport& r, bool with_timing = true);

// Machine-readable form: a JSON array with one object per report,
//   {"check", "parameters", "bound", "checked",
//    "mismatches": [{"position", "expected", "actual"}],
//    "elapsed_ms", "passed"}
std::string to_json(std::span<const VerificationReport> reports, bool with_timing = true);
std::vector<VerificationReport> reports_from_json(const std::string& text);

}  // namespace sg
