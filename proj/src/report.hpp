#pragma once

#include <optional>
#include <string>
#include <vector>

#include "filtration.hpp"

namespace drinfilt {

/// Self-contained report document: the filtration data plus kernel-character
/// summaries, renderable as deterministic text or JSON.
struct ReportDocument {
  std::string tool_name;
  std::string tool_version;
  FiltrationReport filtration;
  long long pole_bound = 0;
  /// Per subquotient j (1..d): kernel mass grouped by the block-degree
  /// functional, pairs (degree, mass) sorted by degree.  Absent when kernels
  /// were skipped (pole_bound = 0); present and empty when the truncated
  /// kernel vanishes.
  std::vector<std::optional<std::vector<std::pair<long long, long long>>>> kernel_masses;
  std::vector<std::string> notes;
};

ReportDocument build_report_document(int d, const Weight& lambda, long long pole_bound);

std::string render_report_text(const ReportDocument& doc);
std::string render_report_json(const ReportDocument& doc);

}  // namespace drinfilt
