#include "sg/report.hpp"

#include <iomanip>
#include <ostream>

#include "json.hpp"

namespace sg {

std::vector<Mismatch> merge_mismatches(std::vector<std::vector<Mismatch>> parts) {
  std::vector<Mismatch> out;
  for (auto& part : parts) {
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

void write_text(std::ostream& os, const VerificationReport& r, bool with_timing) {
  os << (r.passed() ? "PASS " : "FAIL ") << r.check;
  if (!r.parameters.empty()) os << " " << r.parameters;
  os << " bound=" << r.bound << " checked=" << r.positions_checked
     << " mismatches=" << r.mismatches.size();
  if (with_timing) os << " elapsed_ms=" << std::fixed << std::setprecision(1) << r.elapsed_ms;
  os << "\n";
  for (const auto& m : r.mismatches) {
    os << "  mismatch " << m.position << " expected=" << m.expected << " actual=" << m.actual << "\n";
  }
}

std::string to_json(std::span<const VerificationReport> reports, bool with_timing) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json rec;
    rec["check"] = r.check;
    rec["parameters"] = r.parameters;
    rec["bound"] = r.bound;
    rec["checked"] = r.positions_checked;
    auto mm = nlohmann::ordered_json::array();
    for (const auto& m : r.mismatches) {
      mm.push_back({{"position", m.position}, {"expected", m.expected}, {"actual", m.actual}});
    }
    rec["mismatches"] = std::move(mm);
    if (with_timing) rec["elapsed_ms"] = r.elapsed_ms;
    rec["passed"] = r.passed();
    doc.push_back(std::move(rec));
  }
  return doc.dump(2);
}

std::vector<VerificationReport> reports_from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  std::vector<VerificationReport> out;
  for (const auto& rec : doc) {
    VerificationReport r;
    r.check = rec.at("check").get<std::string>();
    r.parameters = rec.value("parameters", std::string{});
    r.bound = rec.at("bound").get<std::uint64_t>();
    r.positions_checked = rec.at("checked").get<std::uint64_t>();
    for (const auto& m : rec.at("mismatches")) {
      r.mismatches.push_back({m.at("position").get<std::string>(), m.at("expected").get<std::string>(),
                              m.at("actual").get<std::string>()});
    }
    r.elapsed_ms = rec.value("elapsed_ms", 0.0);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace sg
