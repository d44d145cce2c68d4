#pragma once

#include <cstddef>
#include <vector>

#include "fermataudit/polynomial.hpp"

namespace fermataudit {

/// Sign-variation count plus the parity-compatible candidate set for the
/// number of positive real roots (with multiplicity): {v, v-2, ..., 0 or 1}.
struct DescartesResult {
  unsigned variations = 0;
  std::vector<unsigned> possible_root_counts;

  bool operator==(const DescartesResult&) const = default;
};

struct NewtonCheckRow {
  std::size_t index = 0;  // interior coefficient index k, 0 < k < degree
  Rational lhs;           // a_k^2
  Rational rhs;           // a_{k-1} * a_{k+1}, signed coefficients
  bool holds = false;     // strict: lhs > rhs

  bool operator==(const NewtonCheckRow&) const = default;
};

/// Per-index results of the Du Gua-Huat-Euler / Newton coefficient test.
/// all_hold records the test outcome only; it is not treated as a proof
/// of real-rootedness anywhere in this library.
struct NewtonCheckResult {
  std::vector<NewtonCheckRow> per_index;
  bool all_hold = false;

  bool operator==(const NewtonCheckResult&) const = default;
};

/// Pairwise disjoint rational-endpoint intervals, sorted ascending, one per
/// distinct real root. Interval endpoints are never roots.
struct RootIsolation {
  std::vector<Interval> intervals;
  std::size_t distinct_count = 0;
};

/// Signed-remainder sequence of the square-free part of f. Counts distinct
/// real roots; endpoint queries require non-root arguments.
class SturmChain {
 public:
  explicit SturmChain(const Polynomial& f);  // f nonzero

  const Polynomial& square_free() const { return chain_.front(); }
  bool is_root(const Rational& t) const { return chain_.front().evaluate(t).is_zero(); }

  unsigned variations_at(const Rational& t) const;
  unsigned variations_at_neg_inf() const;
  unsigned variations_at_pos_inf() const;

  unsigned count_whole_line() const;
  /// Distinct roots in (a, b); a and b must not be roots.
  unsigned count_between(const Rational& a, const Rational& b) const;

 private:
  std::vector<Polynomial> chain_;
};

/// Number of sign changes in the coefficient sequence, zeros skipped.
/// Zero polynomial -> domain_error.
unsigned sign_variations(const Polynomial& f);

DescartesResult descartes_positive(const Polynomial& f);
/// Descartes bound for negative roots: sign variations of f(-t).
DescartesResult descartes_negative(const Polynomial& f);

/// Strict coefficient inequality a_k^2 > a_{k-1} a_{k+1} for every interior
/// index; requires degree >= 2.
NewtonCheckResult newton_dugua_check(const Polynomial& f);

/// Distinct real roots over the whole line.
unsigned sturm_real_root_count(const Polynomial& f);
/// Distinct real roots in the range. Endpoints that are roots of the
/// square-free part are nudged outward by 1/(1 + endpoint denominator),
/// repeatedly, until the endpoint evaluation is nonzero.
unsigned sturm_real_root_count(const Polynomial& f, const Interval& range);

/// Cauchy bound: every real root lies strictly inside (-B, B),
/// B = 1 + max_{k<n} |a_k| / |a_n|.
Rational cauchy_root_bound(const Polynomial& f);

/// Isolating intervals for every distinct real root: Cauchy bound, then
/// recursive Sturm-count bisection.
RootIsolation isolate_real_roots(const Polynomial& f);

/// Shrinks a bracket known to contain exactly one distinct real root to
/// width <= eps. Exact-root midpoints give a degenerate result. A bracket
/// whose Sturm count differs from 1 -> parameter_error.
Interval refine_root(const Polynomial& f, const Interval& bracket, const Rational& eps);

/// (-1)^degree * a_0 / a_degree: the product of all complex roots with
/// multiplicity. Degree 0 or zero polynomial -> domain_error.
Rational vieta_product(const Polynomial& f);

/// All rational roots of an integer-coefficient polynomial, via the
/// rational-root theorem with exact verification of each candidate.
/// Sorted ascending, deduplicated.
std::vector<Rational> rational_root_test(const Polynomial& g);

/// Real roots counted with multiplicity, via the repeated-gcd chain
/// f, gcd(f, f'), gcd(gcd(f, f'), ...): each level contributes its
/// distinct real roots.
std::size_t real_root_count_with_multiplicity(const Polynomial& f);

}  // namespace fermataudit
