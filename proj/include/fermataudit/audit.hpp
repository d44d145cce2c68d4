#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fermataudit/family.hpp"
#include "fermataudit/report.hpp"

namespace fermataudit {

/// n = p * q with p the smallest odd prime factor of n, or p = 4 when n is
/// a power of two.
struct ReductionResult {
  BigInt n;
  BigInt p;
  BigInt q;

  bool operator==(const ReductionResult&) const = default;
};

/// Requires n > 2.
ReductionResult reduce_exponent(const BigInt& n);

struct DiagonalHit {
  BigInt x;
  BigInt z;  // z^n = 2 x^n

  bool operator==(const DiagonalHit&) const = default;
};

struct DiagonalResult {
  unsigned n = 0;
  BigInt xmax;
  std::vector<DiagonalHit> hits;  // expected empty
};

/// Tests 2 x^n for perfect n-th powers over 1 <= x <= xmax, by exact
/// integer root extraction. Requires n > 2, xmax >= 1.
DiagonalResult diagonal_check(unsigned n, const BigInt& xmax);

struct NearMiss {
  BigInt x;
  BigInt y;
  BigInt z;
  BigInt residual;  // z^p - x^p - y^p

  bool operator==(const NearMiss&) const = default;
};

struct SearchResult {
  unsigned p = 0;
  BigInt bound;
  std::vector<FermatTriple> solutions;  // expected empty
  std::vector<NearMiss> near_misses;    // all minimizers of |residual|, (z, y, x) ascending
};

/// Exhaustive exact-integer scan of 1 <= x <= y < z <= bound.
/// Requires p an odd prime and bound >= 3.
SearchResult brute_force_search(unsigned p, const BigInt& bound);

/// Runs the full analysis suite on one (p, u) instance and fills the
/// per-claim verdicts from the measurements.
AuditReport audit_instance(const FamilyParams& params, const Rational& eps);

/// Audit fragment for one candidate triple: the rational slope d = (z-y)/x,
/// its residual under the slope polynomial at u = x/z, and the full
/// rational-root scan of the integer family polynomial.
struct TripleReport {
  BigInt x;
  BigInt y;
  BigInt z;
  unsigned p = 0;
  Rational u;         // x/z in lowest terms
  Rational d;         // (z - y)/x
  Rational residual;  // zero iff the triple solves x^p + y^p = z^p
  bool is_counterexample = false;
  std::vector<Rational> family_coefficients;  // integer family polynomial
  std::vector<Rational> rational_roots;
};

TripleReport audit_triple(const FermatTriple& t);

struct GridEntry {
  unsigned p = 0;
  Rational u;
  std::optional<AuditReport> report;  // absent when the instance errored
  std::string error;

  /// Filename-safe instance label, e.g. "p3_u1-4".
  std::string label() const;
};

/// Audits u = i/(u_count + 1) for i = 1..u_count for each p, sorted by
/// (p, u). Instances run concurrently; assembly order is deterministic.
/// Per-instance parameter errors are recorded in the entry, not thrown.
std::vector<GridEntry> audit_grid(const std::vector<unsigned>& ps, unsigned u_count,
                                  const Rational& eps);

/// 1/10^30.
Rational default_epsilon();

std::string render_triple(const TripleReport& r, ReportFormat format);
std::string render_search(const SearchResult& r, ReportFormat format);
std::string render_reduction(const ReductionResult& r, ReportFormat format);
std::string render_diagonal(const DiagonalResult& r, ReportFormat format);
std::string render_grid(const std::vector<GridEntry>& entries, ReportFormat format);
std::string render_grid_entry(const GridEntry& entry, ReportFormat format);

}  // namespace fermataudit
