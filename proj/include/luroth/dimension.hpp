#pragma once

#include <vector>

#include "luroth/digit_set.hpp"
#include "luroth/rational.hpp"

namespace luroth {

/// Root of the dimension equation sum (1/(d(d-1)))^s = 1 over a finite
/// alphabet, found by bisection. The bracket is a certificate: the sum
/// strictly exceeds 1 at lo and strictly falls below 1 at hi, with a
/// safety margin over accumulated rounding (the bracket widens by ulps
/// when the margin is too thin).
struct DimensionResult {
  double value = 0.0;
  double lo = 0.0, hi = 0.0;   // certified bracket, lo < value < hi
  double residual = 0.0;       // |moran_sum(value) - 1|
  int iterations = 0;
  Rat exact_sum_at_1{0};       // the s=1 sum as an exact rational
  bool degenerate = false;     // singleton alphabet: dimension 0 exactly
};

/// Compensated (Kahan) sum of (1/(d(d-1)))^s over the alphabet.
double moran_sum(const DigitSet& ds, double s);

/// Exact rational value of the s=1 sum. For a band it telescopes to
/// 1/(N1-1) - 1/N2; the telescoped and the termwise routes are asserted
/// equal.
Rat moran_sum_exact_at_1(const DigitSet& ds);

/// Dimension of the digit-restricted set for a finite alphabet (finite
/// set or band); tolerance in [2^-52, 1e-3].
DimensionResult moran_solve(const DigitSet& ds, double tolerance);

/// Dimension of the band {k..N} as a lower bound for the ray set k.
DimensionResult ray_lower_bound(long k, long N, double tolerance);

/// Doubles the band top until the dimension gain drops below gain_tol or
/// the top exceeds n_cap; returns the last solve and the band top used.
struct RaySearchResult {
  long N;
  DimensionResult result;
  int doublings;
};
RaySearchResult ray_search(long k, double solve_tolerance, double gain_tolerance,
                           long n_cap = 1L << 20);

/// Certificate that the band dimension clears a target on some rung of
/// the doubling ladder: since the Moran sum is strictly decreasing in s
/// and equals 1 at the band dimension, sum(target) > 1 proves
/// s_{k,N} > target. The sum is extended incrementally across rungs, so
/// the whole ladder costs one pass over the digits. The clearance must
/// exceed the compensated-summation noise floor.
struct RayBoundCertificate {
  long k;
  double target;
  long N = 0;               // first doubling rung that clears the target
  double sum_at_target = 0; // the certified sum there
  int doublings = 0;
  bool holds = false;
};
RayBoundCertificate ray_bound_certificate(long k, double target, long n_cap);

/// Closed-form lower bound 1/2 + 1/(2 ln max{16,k}) for the ray set
/// dimension (natural logarithm).
double good_bound(long k);

/// Internals of the bound's derivation: the fixed point x_k of
/// x -> k^{-x}, the bound s_k = (x_k+1)/2, the band top
/// N = max{k+1, ceil((x_k(k^eps - 1))^(-1/(x_k - eps)))}, and the sign
/// change of F(x) = k^{-x} - N^{-x} - x across [x_k - eps, x_k].
struct GoodBoundInternals {
  double x_k;
  double s_k;
  long N;
  double F_at_xk;            // < 0
  double F_at_xk_minus_eps;  // > 0
  bool sign_change() const { return F_at_xk < 0.0 && F_at_xk_minus_eps > 0.0; }
};
GoodBoundInternals good_bound_internals(long k, double epsilon);

/// Verifies that some band top N <= n_cap pushes the band dimension
/// strictly above good_bound(k): the Moran sum at the bound value must
/// exceed 1 with a compensated-summation margin.
struct GoodBoundConsistency {
  long k;
  double bound;
  long N = 0;          // first band top whose sum clears the margin
  double sum_at_bound = 0.0;
  bool holds = false;
};
GoodBoundConsistency good_bound_consistency(long k, long n_cap);

/// Dimension of the sum of two finite-alphabet sets: min(1, dim A + dim B).
/// Also records whether the two alphabets offer distinct digits (the
/// hypothesis route behind the formula; a singleton pair degenerates).
struct SumsetDimResult {
  double value;
  DimensionResult dim_a, dim_b;
  bool distinct_digits;
};
SumsetDimResult sumset_dim(const DigitSet& a, const DigitSet& b, double tolerance);

/// Dimension of the band {k..3k} with the two endpoint certificates:
/// the s=1 sum equals (2k+1)/(3k(k-1)) < 1 exactly, and the s=1/2 sum
/// exceeds 1 via the exact harmonic lower bound sum 1/d > 1.
struct BandK3kResult {
  long k;
  Rat sum_at_1;            // exact, equals (2k+1)/(3k(k-1))
  bool sum_at_1_below_1;
  Rat harmonic_lower;      // exact sum of 1/d over the band
  bool harmonic_exceeds_1;
  DimensionResult dim;     // solved dimension, > 1/2
};
BandK3kResult dim_band_k_3k(long k, double tolerance);

}  // namespace luroth
