#include "fermataudit/root_analysis.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "fermataudit/errors.hpp"

namespace fermataudit {

namespace {

int sign_at_pos_inf(const Polynomial& f) { return f.leading_coefficient().sign(); }

int sign_at_neg_inf(const Polynomial& f) {
  int s = f.leading_coefficient().sign();
  return (*f.degree() % 2 == 0) ? s : -s;
}

unsigned count_variations(const std::vector<int>& signs) {
  unsigned v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) {
      continue;
    }
    if (prev != 0 && s != prev) {
      ++v;
    }
    prev = s;
  }
  return v;
}

std::vector<unsigned> parity_candidates(unsigned variations) {
  std::vector<unsigned> counts;
  for (unsigned c = variations;; c -= 2) {
    counts.push_back(c);
    if (c < 2) {
      break;
    }
  }
  return counts;
}

// All positive divisors, by trial-division factorization. Desk scale.
std::vector<BigInt> positive_divisors(const BigInt& value) {
  BigInt n = boost::multiprecision::abs(value);
  std::vector<std::pair<BigInt, unsigned>> factors;
  for (BigInt d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) {
      factors.emplace_back(d, e);
    }
  }
  if (n > 1) {
    factors.emplace_back(n, 1);
  }
  std::vector<BigInt> divisors{BigInt(1)};
  for (const auto& [prime, exp] : factors) {
    const std::size_t base = divisors.size();
    BigInt pe = 1;
    for (unsigned e = 1; e <= exp; ++e) {
      pe *= prime;
      for (std::size_t i = 0; i < base; ++i) {
        divisors.push_back(divisors[i] * pe);
      }
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

}  // namespace

SturmChain::SturmChain(const Polynomial& f) {
  if (f.is_zero()) {
    throw domain_error("SturmChain: zero polynomial");
  }
  Polynomial g = square_free_part(f);
  chain_.push_back(g);
  if (*g.degree() == 0) {
    return;
  }
  chain_.push_back(g.derivative());
  while (true) {
    const Polynomial& prev = chain_[chain_.size() - 2];
    const Polynomial& last = chain_.back();
    Polynomial rem = Polynomial::divmod(prev, last).second;
    if (rem.is_zero()) {
      break;
    }
    // Scale by a positive constant to tame coefficient growth; signs are
    // unaffected.
    Rational scale = rem.leading_coefficient().abs().reciprocal();
    chain_.push_back(-(scale * rem));
  }
}

unsigned SturmChain::variations_at(const Rational& t) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& s : chain_) {
    signs.push_back(s.evaluate(t).sign());
  }
  return count_variations(signs);
}

unsigned SturmChain::variations_at_neg_inf() const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& s : chain_) {
    signs.push_back(sign_at_neg_inf(s));
  }
  return count_variations(signs);
}

unsigned SturmChain::variations_at_pos_inf() const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& s : chain_) {
    signs.push_back(sign_at_pos_inf(s));
  }
  return count_variations(signs);
}

unsigned SturmChain::count_whole_line() const {
  if (*chain_.front().degree() == 0) {
    return 0;
  }
  return variations_at_neg_inf() - variations_at_pos_inf();
}

unsigned SturmChain::count_between(const Rational& a, const Rational& b) const {
  if (*chain_.front().degree() == 0 || b <= a) {
    return 0;
  }
  return variations_at(a) - variations_at(b);
}

unsigned sign_variations(const Polynomial& f) {
  if (f.is_zero()) {
    throw domain_error("sign_variations: zero polynomial");
  }
  std::vector<int> signs;
  signs.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) {
    signs.push_back(c.sign());
  }
  return count_variations(signs);
}

DescartesResult descartes_positive(const Polynomial& f) {
  unsigned v = sign_variations(f);
  return {v, parity_candidates(v)};
}

DescartesResult descartes_negative(const Polynomial& f) {
  unsigned v = sign_variations(f.reflected());
  return {v, parity_candidates(v)};
}

NewtonCheckResult newton_dugua_check(const Polynomial& f) {
  auto deg = f.degree();
  if (!deg || *deg < 2) {
    throw domain_error("newton_dugua_check: degree must be >= 2");
  }
  NewtonCheckResult result;
  result.all_hold = true;
  for (std::size_t k = 1; k < *deg; ++k) {
    NewtonCheckRow row;
    row.index = k;
    row.lhs = f.coefficient(k) * f.coefficient(k);
    row.rhs = f.coefficient(k - 1) * f.coefficient(k + 1);
    row.holds = row.lhs > row.rhs;
    result.all_hold = result.all_hold && row.holds;
    result.per_index.push_back(std::move(row));
  }
  return result;
}

unsigned sturm_real_root_count(const Polynomial& f) {
  return SturmChain(f).count_whole_line();
}

unsigned sturm_real_root_count(const Polynomial& f, const Interval& range) {
  SturmChain chain(f);
  Rational lo = range.lo();
  Rational hi = range.hi();
  while (chain.is_root(lo)) {
    lo -= Rational(BigInt(1), lo.denominator() + 1);
  }
  while (chain.is_root(hi)) {
    hi += Rational(BigInt(1), hi.denominator() + 1);
  }
  return chain.count_between(lo, hi);
}

Rational cauchy_root_bound(const Polynomial& f) {
  auto deg = f.degree();
  if (!deg) {
    throw domain_error("cauchy_root_bound: zero polynomial");
  }
  Rational max_ratio(0);
  const Rational lead_abs = f.leading_coefficient().abs();
  for (std::size_t k = 0; k < *deg; ++k) {
    Rational ratio = f.coefficient(k).abs() / lead_abs;
    max_ratio = std::max(max_ratio, ratio);
  }
  return Rational(1) + max_ratio;
}

namespace {

// Non-root bracket around a known exact root m inside (a, b) that contains
// no other root.
Interval fence_exact_root(const SturmChain& chain, const Rational& a, const Rational& b,
                          const Rational& m) {
  Rational h = std::min(m - a, b - m) / Rational(2);
  while (true) {
    Rational lo = m - h;
    Rational hi = m + h;
    if (!chain.is_root(lo) && !chain.is_root(hi) && chain.count_between(lo, hi) == 1) {
      return Interval(lo, hi);
    }
    h /= Rational(2);
  }
}

// Pre: a < b, neither is a root.
void isolate_recursive(const SturmChain& chain, const Rational& a, const Rational& b,
                       std::vector<Interval>& out) {
  unsigned count = chain.count_between(a, b);
  if (count == 0) {
    return;
  }
  if (count == 1) {
    out.emplace_back(a, b);
    return;
  }
  Rational m = (a + b) / Rational(2);
  if (chain.is_root(m)) {
    Interval fence = fence_exact_root(chain, a, b, m);
    isolate_recursive(chain, a, fence.lo(), out);
    out.push_back(fence);
    isolate_recursive(chain, fence.hi(), b, out);
  } else {
    isolate_recursive(chain, a, m, out);
    isolate_recursive(chain, m, b, out);
  }
}

// One bisection step on an isolating interval; the root stays inside and
// endpoints stay non-roots.
Interval shrink_isolating(const SturmChain& chain, const Interval& iv) {
  Rational m = iv.midpoint();
  if (chain.is_root(m)) {
    return fence_exact_root(chain, iv.lo(), iv.hi(), m);
  }
  if (chain.count_between(iv.lo(), m) == 1) {
    return Interval(iv.lo(), m);
  }
  return Interval(m, iv.hi());
}

BigInt floor_of(const Rational& r) {
  BigInt q = r.numerator() / r.denominator();
  if (r.numerator() < 0 && q * r.denominator() != r.numerator()) {
    --q;
  }
  return q;
}

// An interval certifies its root's position between consecutive integers
// once every integer it contains is the root itself.
bool avoids_foreign_integers(const SturmChain& chain, const Interval& iv) {
  BigInt first = -floor_of(-iv.lo());  // ceil(lo)
  BigInt last = floor_of(iv.hi());
  if (first > last) {
    return true;
  }
  return first == last && chain.is_root(Rational(first));
}

}  // namespace

RootIsolation isolate_real_roots(const Polynomial& f) {
  if (f.is_zero()) {
    throw domain_error("isolate_real_roots: zero polynomial");
  }
  RootIsolation result;
  if (*f.degree() == 0) {
    return result;
  }
  SturmChain chain(f);
  Rational bound = cauchy_root_bound(chain.square_free());
  isolate_recursive(chain, -bound, bound, result.intervals);
  for (auto& iv : result.intervals) {
    while (!avoids_foreign_integers(chain, iv)) {
      iv = shrink_isolating(chain, iv);
    }
  }
  // Adjacent intervals from the bisection may share an endpoint; shrink
  // until they are pairwise disjoint.
  for (std::size_t i = 0; i + 1 < result.intervals.size(); ++i) {
    while (result.intervals[i].hi() >= result.intervals[i + 1].lo()) {
      if (result.intervals[i].width() >= result.intervals[i + 1].width()) {
        result.intervals[i] = shrink_isolating(chain, result.intervals[i]);
      } else {
        result.intervals[i + 1] = shrink_isolating(chain, result.intervals[i + 1]);
      }
    }
  }
  result.distinct_count = result.intervals.size();
  return result;
}

Interval refine_root(const Polynomial& f, const Interval& bracket, const Rational& eps) {
  if (eps.sign() <= 0) {
    throw parameter_error("refine_root: eps must be > 0");
  }
  SturmChain chain(f);
  Rational lo = bracket.lo();
  Rational hi = bracket.hi();
  const bool lo_is_root = chain.is_root(lo);
  const bool hi_is_root = chain.is_root(hi);
  if (lo_is_root && hi_is_root && lo != hi) {
    throw parameter_error("refine_root: bracket must isolate exactly one root");
  }
  if (lo_is_root) {
    return Interval(lo, lo);
  }
  if (hi_is_root) {
    return Interval(hi, hi);
  }
  if (chain.count_between(lo, hi) != 1) {
    throw parameter_error("refine_root: bracket must isolate exactly one root");
  }
  while (hi - lo > eps) {
    Rational m = (lo + hi) / Rational(2);
    if (chain.is_root(m)) {
      return Interval(m, m);
    }
    if (chain.count_between(lo, m) == 1) {
      hi = std::move(m);
    } else {
      lo = std::move(m);
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

Rational vieta_product(const Polynomial& f) {
  auto deg = f.degree();
  if (!deg || *deg == 0) {
    throw domain_error("vieta_product: degree must be >= 1");
  }
  Rational ratio = f.coefficient(0) / f.leading_coefficient();
  return (*deg % 2 == 0) ? ratio : -ratio;
}

std::vector<Rational> rational_root_test(const Polynomial& g) {
  if (g.is_zero()) {
    throw domain_error("rational_root_test: zero polynomial");
  }
  for (const auto& c : g.coefficients()) {
    if (!c.is_integer()) {
      throw parameter_error("rational_root_test: coefficients must be integers");
    }
  }
  std::set<Rational> roots;
  // Strip t^m so the constant term is nonzero; t = 0 is then a root iff m > 0.
  std::size_t first_nonzero = 0;
  while (g.coefficient(first_nonzero).is_zero()) {
    ++first_nonzero;
  }
  if (first_nonzero > 0) {
    roots.insert(Rational(0));
  }
  std::vector<Rational> reduced(g.coefficients().begin() + static_cast<std::ptrdiff_t>(first_nonzero),
                                g.coefficients().end());
  Polynomial h(std::move(reduced));
  if (*h.degree() >= 1) {
    const auto ps = positive_divisors(h.coefficient(0).numerator());
    const auto qs = positive_divisors(h.leading_coefficient().numerator());
    for (const auto& p : ps) {
      for (const auto& q : qs) {
        Rational candidate{p, q};
        if (h.evaluate(candidate).is_zero()) {
          roots.insert(candidate);
        }
        if (h.evaluate(-candidate).is_zero()) {
          roots.insert(-candidate);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

std::size_t real_root_count_with_multiplicity(const Polynomial& f) {
  if (f.is_zero()) {
    throw domain_error("real_root_count_with_multiplicity: zero polynomial");
  }
  std::size_t total = 0;
  Polynomial g = f;
  while (g.degree() && *g.degree() >= 1) {
    total += sturm_real_root_count(g);
    g = gcd_monic(g, g.derivative());
  }
  return total;
}

}  // namespace fermataudit
