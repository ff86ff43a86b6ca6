#include "luroth/dimension.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace luroth {

namespace {

constexpr int kMaxBisections = 200;

std::vector<long> finite_alphabet(const DigitSet& ds) {
  if (ds.kind() == DigitSet::Kind::ray)
    throw std::domain_error("dimension: alphabet must be finite");
  return ds.enumerate();
}

double kahan_sum_pow(const std::vector<long>& digits, double s) {
  double sum = 0.0, carry = 0.0;
  for (long d : digits) {
    const double term = std::pow(1.0 / (static_cast<double>(d) * (d - 1.0)), s);
    const double y = term - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum;
}

double next_down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
double next_up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

}  // namespace

double moran_sum(const DigitSet& ds, double s) { return kahan_sum_pow(finite_alphabet(ds), s); }

Rat moran_sum_exact_at_1(const DigitSet& ds) {
  const auto digits = finite_alphabet(ds);
  Rat sum(0);
  for (long d : digits) sum += Rat(1, 1) / Rat(mpz_class(d) * (d - 1));
  if (ds.kind() == DigitSet::Kind::band) {
    const Rat telescoped = Rat(1, ds.lo() - 1) - Rat(1, ds.hi());
    if (telescoped != sum)
      throw std::logic_error("moran_sum_exact_at_1: telescoped band sum disagrees");
  }
  return sum;
}

DimensionResult moran_solve(const DigitSet& ds, double tolerance) {
  if (tolerance < std::ldexp(1.0, -52) || tolerance > 1e-3)
    throw std::domain_error("moran_solve: tolerance out of range");
  const auto digits = finite_alphabet(ds);

  DimensionResult res;
  res.exact_sum_at_1 = moran_sum_exact_at_1(ds);
  if (digits.size() == 1) {
    res.degenerate = true;  // a single digit pins a single point
    return res;
  }

  // The sum is strictly decreasing in s; it is #digits >= 2 at s=0 and
  // res.exact_sum_at_1 < 1 at s=1 for any finite alphabet of digits >= 2.
  double lo = 0.0, hi = 1.0;
  int it = 0;
  while (hi - lo > tolerance && it < kMaxBisections) {
    ++it;
    const double mid = 0.5 * (lo + hi);
    if (kahan_sum_pow(digits, mid) > 1.0)
      lo = mid;
    else
      hi = mid;
  }
  res.iterations = it;
  res.value = 0.5 * (lo + hi);
  res.residual = std::abs(kahan_sum_pow(digits, res.value) - 1.0);

  // Widen until both bracket sums clear 1 by more than the summation
  // noise floor.
  const double margin =
      10.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(digits.size());
  while (lo > 0.0 && kahan_sum_pow(digits, lo) - 1.0 <= margin) lo = next_down(lo);
  while (hi < 1.0 && 1.0 - kahan_sum_pow(digits, hi) <= margin) hi = next_up(hi);
  if (lo < 0.0) lo = 0.0;
  if (hi > 1.0) hi = 1.0;
  res.lo = lo;
  res.hi = hi;
  return res;
}

DimensionResult ray_lower_bound(long k, long N, double tolerance) {
  if (N <= k) throw std::domain_error("ray_lower_bound: requires k < N");
  return moran_solve(DigitSet::band(k, N), tolerance);
}

RaySearchResult ray_search(long k, double solve_tolerance, double gain_tolerance, long n_cap) {
  long N = 2 * k;
  DimensionResult cur = ray_lower_bound(k, N, solve_tolerance);
  int doublings = 0;
  while (2 * N <= n_cap) {
    DimensionResult next = ray_lower_bound(k, 2 * N, solve_tolerance);
    ++doublings;
    N *= 2;
    const double gain = next.value - cur.value;
    cur = next;
    if (gain < gain_tolerance) break;
  }
  return RaySearchResult{N, cur, doublings};
}

RayBoundCertificate ray_bound_certificate(long k, double target, long n_cap) {
  RayBoundCertificate out;
  out.k = k;
  out.target = target;
  double sum = 0.0, carry = 0.0;
  long rung = 2 * k;
  long d = k;
  while (rung <= n_cap) {
    for (; d <= rung; ++d) {
      const double term = std::pow(1.0 / (static_cast<double>(d) * (d - 1.0)), target);
      const double y = term - carry;
      const double t = sum + y;
      carry = (t - sum) - y;
      sum = t;
    }
    ++out.doublings;
    const double margin =
        10.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(d - k);
    if (sum - 1.0 > margin) {
      out.N = rung;
      out.sum_at_target = sum;
      out.holds = true;
      return out;
    }
    rung *= 2;
  }
  out.sum_at_target = sum;
  return out;
}

double good_bound(long k) {
  if (k < 2) throw std::domain_error("good_bound: k must be >= 2");
  const double base = static_cast<double>(std::max<long>(16, k));
  return 0.5 + 1.0 / (2.0 * std::log(base));
}

GoodBoundInternals good_bound_internals(long k, double epsilon) {
  if (k < 16) throw std::domain_error("good_bound_internals: k must be >= 16");
  // x -> k^{-x} - x decreases strictly; positive at 0, negative at 1.
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < kMaxBisections && hi - lo > std::ldexp(1.0, -50); ++i) {
    const double mid = 0.5 * (lo + hi);
    if (std::pow(static_cast<double>(k), -mid) - mid > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  GoodBoundInternals out;
  out.x_k = 0.5 * (lo + hi);
  out.s_k = 0.5 * (out.x_k + 1.0);
  if (!(epsilon > 0.0 && epsilon < out.x_k))
    throw std::domain_error("good_bound_internals: epsilon must lie in (0, x_k)");
  const double raw =
      std::pow(out.x_k * (std::pow(static_cast<double>(k), epsilon) - 1.0),
               -1.0 / (out.x_k - epsilon));
  out.N = std::max<long>(k + 1, static_cast<long>(std::ceil(raw)));
  auto F = [&](double x) {
    return std::pow(static_cast<double>(k), -x) - std::pow(static_cast<double>(out.N), -x) - x;
  };
  out.F_at_xk = F(out.x_k);
  out.F_at_xk_minus_eps = F(out.x_k - epsilon);
  return out;
}

GoodBoundConsistency good_bound_consistency(long k, long n_cap) {
  GoodBoundConsistency out;
  out.k = k;
  out.bound = good_bound(k);
  // dim of the band {k..N} exceeds the bound iff the sum at the bound
  // exceeds 1 (the sum is decreasing in s and equals 1 at the dimension).
  double sum = 0.0, carry = 0.0;
  long count = 0;
  for (long d = k; d <= n_cap; ++d) {
    const double term = std::pow(1.0 / (static_cast<double>(d) * (d - 1.0)), out.bound);
    const double y = term - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
    ++count;
    const double margin = 10.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(count);
    if (sum - 1.0 > margin) {
      out.N = d;
      out.sum_at_bound = sum;
      out.holds = true;
      return out;
    }
  }
  out.sum_at_bound = sum;
  return out;
}

SumsetDimResult sumset_dim(const DigitSet& a, const DigitSet& b, double tolerance) {
  SumsetDimResult out{0.0, moran_solve(a, tolerance), moran_solve(b, tolerance), false};
  // distinct digits exist unless both alphabets are the same singleton
  const auto da = finite_alphabet(a);
  const auto db = finite_alphabet(b);
  out.distinct_digits = !(da.size() == 1 && db.size() == 1 && da[0] == db[0]);
  out.value = std::min(1.0, out.dim_a.value + out.dim_b.value);
  return out;
}

BandK3kResult dim_band_k_3k(long k, double tolerance) {
  if (k < 2) throw std::domain_error("dim_band_k_3k: k must be >= 2");
  BandK3kResult out;
  out.k = k;
  const DigitSet band = DigitSet::band(k, 3 * k);
  out.sum_at_1 = moran_sum_exact_at_1(band);
  if (out.sum_at_1 != Rat(2 * k + 1, 3 * k * (k - 1)))
    throw std::logic_error("dim_band_k_3k: closed form of the s=1 sum disagrees");
  out.sum_at_1_below_1 = out.sum_at_1 < Rat(1);
  // (d(d-1))^{-1/2} > 1/d termwise, so the exact harmonic sum is a lower
  // bound for the s=1/2 sum.
  Rat harmonic(0);
  for (long d = k; d <= 3 * k; ++d) harmonic += Rat(1, d);
  out.harmonic_lower = harmonic;
  out.harmonic_exceeds_1 = harmonic > Rat(1);
  out.dim = moran_solve(band, tolerance);
  return out;
}

}  // namespace luroth
