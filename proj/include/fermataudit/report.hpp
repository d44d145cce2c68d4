#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fermataudit/root_analysis.hpp"

namespace fermataudit {

enum class ReportFormat { json, text };

/// Outcome of one audited claim. Verdicts are filled from measured
/// quantities in the same report, never hard-coded, and every value quoted
/// in the evidence string appears elsewhere in the report.
struct ClaimVerdict {
  std::string id;  // "C1" .. "C9"
  std::string statement;
  std::string paper_anchor;
  bool holds = false;
  std::string evidence;

  bool operator==(const ClaimVerdict&) const = default;
};

/// Full per-instance audit: every measured quantity plus the per-claim
/// verdicts. Serializes to canonical JSON (fixed key order, rationals as
/// "num/den" strings, no floating-point values) and to line-oriented text.
struct AuditReport {
  int schema_version = 1;

  unsigned p = 0;
  Rational u;
  Rational epsilon;

  std::size_t degree = 0;
  std::vector<Rational> coefficients;  // ascending by degree

  unsigned variations = 0;
  std::vector<unsigned> possible_positive_counts;
  unsigned negative_variations = 0;

  NewtonCheckResult newton;

  std::size_t distinct_count = 0;
  std::vector<Interval> isolating_intervals;
  std::vector<Interval> refined_intervals;

  Interval alpha;
  Interval d_star;

  Rational vieta_product;
  std::size_t square_free_degree = 0;

  std::vector<ClaimVerdict> claims;

  bool operator==(const AuditReport&) const = default;
};

/// Deterministic rendering: equal reports produce identical bytes.
std::string render_report(const AuditReport& report, ReportFormat format);

/// Inverse of the JSON rendering; malformed input -> parameter_error.
AuditReport parse_report(std::string_view json_text);

}  // namespace fermataudit
