#include "fermataudit/audit.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "fermataudit/errors.hpp"

namespace fermataudit {

namespace {

unsigned long long to_ull(const BigInt& value, const char* what) {
  if (value < 0 || value > BigInt(1'000'000'000ULL)) {
    throw parameter_error(std::string(what) + " out of supported range");
  }
  return value.convert_to<unsigned long long>();
}

std::string interval_text(const Interval& iv) {
  return "[" + iv.lo().to_string() + ", " + iv.hi().to_string() + "]";
}

}  // namespace

Rational default_epsilon() { return Rational(BigInt(1), boost::multiprecision::pow(BigInt(10), 30)); }

ReductionResult reduce_exponent(const BigInt& n) {
  if (n <= 2) {
    throw domain_error("reduce_exponent: n must be > 2");
  }
  BigInt odd_part = n;
  while (odd_part % 2 == 0) {
    odd_part /= 2;
  }
  if (odd_part == 1) {
    return {n, 4, n / 4};
  }
  BigInt p = odd_part;
  for (BigInt d = 3; d * d <= odd_part; d += 2) {
    if (odd_part % d == 0) {
      p = d;
      break;
    }
  }
  return {n, p, n / p};
}

DiagonalResult diagonal_check(unsigned n, const BigInt& xmax) {
  if (n <= 2) {
    throw domain_error("diagonal_check: n must be > 2");
  }
  if (xmax < 1) {
    throw parameter_error("diagonal_check: xmax must be >= 1");
  }
  DiagonalResult result{n, xmax, {}};
  const unsigned long long limit = to_ull(xmax, "diagonal_check: xmax");
  for (unsigned long long x = 1; x <= limit; ++x) {
    BigInt doubled = 2 * boost::multiprecision::pow(BigInt(x), n);
    BigInt z;
    if (exact_integer_nth_root(doubled, n, z)) {
      result.hits.push_back({BigInt(x), std::move(z)});
    }
  }
  return result;
}

SearchResult brute_force_search(unsigned p, const BigInt& bound) {
  if (!is_odd_prime(BigInt(p))) {
    throw parameter_error("brute_force_search: p must be an odd prime");
  }
  if (bound < 3) {
    throw parameter_error("brute_force_search: bound must be >= 3");
  }
  const unsigned long long limit = to_ull(bound, "brute_force_search: bound");
  std::vector<BigInt> powers(limit + 1);
  for (unsigned long long i = 0; i <= limit; ++i) {
    powers[i] = boost::multiprecision::pow(BigInt(i), p);
  }

  SearchResult result;
  result.p = p;
  result.bound = bound;
  BigInt best_abs = -1;
  for (unsigned long long z = 2; z <= limit; ++z) {
    for (unsigned long long y = 1; y < z; ++y) {
      for (unsigned long long x = 1; x <= y; ++x) {
        BigInt residual = powers[z] - powers[x] - powers[y];
        if (residual.is_zero()) {
          result.solutions.emplace_back(BigInt(x), BigInt(y), BigInt(z), p);
          continue;
        }
        BigInt abs_res = boost::multiprecision::abs(residual);
        if (best_abs < 0 || abs_res < best_abs) {
          best_abs = abs_res;
          result.near_misses.clear();
        }
        if (abs_res == best_abs) {
          result.near_misses.push_back({BigInt(x), BigInt(y), BigInt(z), std::move(residual)});
        }
      }
    }
  }
  return result;
}

namespace {

ClaimVerdict make_claim(const char* id, const char* statement, const char* anchor, bool holds,
                        std::string evidence) {
  return {id, statement, anchor, holds, std::move(evidence)};
}

}  // namespace

AuditReport audit_instance(const FamilyParams& params, const Rational& eps) {
  if (eps.sign() <= 0) {
    throw parameter_error("audit_instance: epsilon must be > 0");
  }
  const SlopePolynomial closed = build_family_closed_form(params);
  const SlopePolynomial expanded = build_family_by_expansion(params);
  if (closed.poly != expanded.poly) {
    throw std::logic_error("audit_instance: family constructions disagree");
  }
  const Polynomial& f = closed.poly;
  const unsigned p = params.p();

  AuditReport r;
  r.p = p;
  r.u = params.u();
  r.epsilon = eps;
  r.degree = *f.degree();
  r.coefficients = f.coefficients();

  const DescartesResult pos = descartes_positive(f);
  r.variations = pos.variations;
  r.possible_positive_counts = pos.possible_root_counts;
  r.negative_variations = descartes_negative(f).variations;

  r.newton = newton_dugua_check(f);

  RootIsolation iso = isolate_real_roots(f);
  r.distinct_count = iso.distinct_count;
  r.isolating_intervals = iso.intervals;
  for (const auto& iv : iso.intervals) {
    r.refined_intervals.push_back(refine_root(f, iv, eps));
  }

  GeometricSlope slope = geometric_slope_d(params, eps);
  r.alpha = slope.alpha;
  r.d_star = slope.d_star;

  r.vieta_product = vieta_product(f);
  r.square_free_degree = *square_free_part(f).degree();

  const std::size_t with_multiplicity = real_root_count_with_multiplicity(f);
  const unsigned roots_in_unit = sturm_real_root_count(f, Interval(Rational(0), Rational(1)));

  const std::string p_str = std::to_string(p);

  r.claims.push_back(make_claim(
      "C1", "the coefficient sign-variation count equals p", "descartes-positive-variations",
      r.variations == p, "variations=" + std::to_string(r.variations) + " p=" + p_str));

  r.claims.push_back(make_claim("C2", "the polynomial has no negative real roots",
                                "descartes-no-negative-roots", r.negative_variations == 0,
                                "negative_variations=" + std::to_string(r.negative_variations)));

  r.claims.push_back(make_claim("C3", "zero is not a root", "zero-not-a-root",
                                !f.coefficient(0).is_zero(),
                                "constant_term=" + f.coefficient(0).to_string()));

  {
    const NewtonCheckRow& boundary = r.newton.per_index.front();
    r.claims.push_back(make_claim(
        "C4", "every interior coefficient index satisfies a(k)^2 > a(k-1)*a(k+1)",
        "dugua-coefficient-inequality", r.newton.all_hold,
        std::string("all_hold=") + (r.newton.all_hold ? "true" : "false") +
            " k=" + std::to_string(boundary.index) + " lhs=" + boundary.lhs.to_string() +
            " rhs=" + boundary.rhs.to_string()));
  }

  r.claims.push_back(make_claim(
      "C5", "all p roots are real", "all-roots-real", with_multiplicity == p,
      "with_multiplicity=" + std::to_string(with_multiplicity) +
          " distinct_count=" + std::to_string(r.distinct_count) + " p=" + p_str));

  {
    std::string evidence = "roots_in_unit_interval=" + std::to_string(roots_in_unit);
    if (roots_in_unit == 1 && r.distinct_count >= 1) {
      evidence += " isolating=" + interval_text(r.isolating_intervals.front());
    }
    r.claims.push_back(make_claim("C6", "exactly one real root lies in (0, 1)",
                                  "unique-intercepting-slope", roots_in_unit == 1,
                                  std::move(evidence)));
  }

  {
    // The enclosure of the geometric slope and the refined enclosure of the
    // unit-interval root both contain the same real number, so they must
    // overlap; failure to certify that at this epsilon is a tolerance error.
    bool overlap = false;
    const Interval* witness = nullptr;
    for (const auto& iv : r.refined_intervals) {
      if (iv.intersects(r.d_star)) {
        overlap = true;
        witness = &iv;
        break;
      }
    }
    if (!overlap && roots_in_unit == 1) {
      throw tolerance_error(
          "audit_instance: cannot certify overlap of the root enclosure and d_star at epsilon " +
          eps.to_string() + "; retry with a smaller epsilon");
    }
    std::string evidence = "d_star=" + interval_text(r.d_star);
    if (witness != nullptr) {
      evidence += " refined=" + interval_text(*witness);
    }
    r.claims.push_back(make_claim("C7", "the geometric secant slope is a root of the polynomial",
                                  "geometric-slope-is-root", overlap, std::move(evidence)));
  }

  r.claims.push_back(make_claim(
      "C8", "all roots of the polynomial are equal", "all-roots-equal", r.square_free_degree == 1,
      "square_free_degree=" + std::to_string(r.square_free_degree) +
          " degree=" + std::to_string(r.degree)));

  r.claims.push_back(make_claim("C9", "the product of all roots equals 1", "product-of-roots",
                                r.vieta_product == Rational(1),
                                "vieta_product=" + r.vieta_product.to_string()));

  return r;
}

TripleReport audit_triple(const FermatTriple& t) {
  if (t.x >= t.z) {
    throw parameter_error("audit_triple: requires 0 < x < z");
  }
  TripleReport r;
  r.x = t.x;
  r.y = t.y;
  r.z = t.z;
  r.p = t.p;
  r.u = Rational(t.x, t.z);
  r.d = Rational(t.z - t.y, t.x);
  r.residual = fermat_residual(t);
  r.is_counterexample = r.residual.is_zero();
  const Polynomial g = integer_family_poly(t.p, r.u.numerator(), r.u.denominator());
  r.family_coefficients = g.coefficients();
  r.rational_roots = rational_root_test(g);
  return r;
}

std::string GridEntry::label() const {
  return "p" + std::to_string(p) + "_u" + u.numerator().str() + "-" + u.denominator().str();
}

std::vector<GridEntry> audit_grid(const std::vector<unsigned>& ps, unsigned u_count,
                                  const Rational& eps) {
  if (ps.empty()) {
    throw parameter_error("audit_grid: at least one p is required");
  }
  if (u_count < 1) {
    throw parameter_error("audit_grid: u_count must be >= 1");
  }
  if (eps.sign() <= 0) {
    throw parameter_error("audit_grid: epsilon must be > 0");
  }

  std::vector<unsigned> sorted_ps = ps;
  std::sort(sorted_ps.begin(), sorted_ps.end());

  std::vector<GridEntry> entries;
  entries.reserve(sorted_ps.size() * u_count);
  for (unsigned p : sorted_ps) {
    for (unsigned i = 1; i <= u_count; ++i) {
      GridEntry entry;
      entry.p = p;
      entry.u = Rational(BigInt(i), BigInt(u_count) + 1);
      entries.push_back(std::move(entry));
    }
  }

  // Instances are independent pure computations; run them on a small pool
  // and assemble by index so the output order is schedule-independent.
  std::atomic<std::size_t> next{0};
  auto worker = [&entries, &next, &eps]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= entries.size()) {
        return;
      }
      GridEntry& entry = entries[i];
      try {
        FamilyParams params(entry.p, entry.u);
        entry.report = audit_instance(params, eps);
      } catch (const std::exception& e) {
        entry.error = e.what();
      }
    }
  };
  unsigned pool = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()),
                                        entries.size());
  std::vector<std::thread> threads;
  threads.reserve(pool);
  for (unsigned i = 0; i < pool; ++i) {
    threads.emplace_back(worker);
  }
  for (auto& th : threads) {
    th.join();
  }
  return entries;
}

}  // namespace fermataudit
