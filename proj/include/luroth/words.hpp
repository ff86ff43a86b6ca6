#pragma once

#include <vector>

#include "luroth/rational.hpp"

namespace luroth {

/// An eventually periodic digit word. Digits are the linearised-Gauss-map
/// branch indices, always >= 2. Canonical form: the period is not a
/// repetition of a shorter block, and the preperiod never ends with a
/// rotation-aligned copy of the period, so each rational in (0,1] has
/// exactly one representation.
struct LurothWord {
  std::vector<long> preperiod;
  std::vector<long> period;  // nonempty

  friend bool operator==(const LurothWord&, const LurothWord&) = default;
};

/// Rewrites (preperiod, period) into canonical form. Throws on digits < 2
/// or an empty period.
LurothWord canonical_word(std::vector<long> preperiod, std::vector<long> period);

/// Value of the single-digit periodic word: (d-1)/(d(d-1)-1).
Rat periodic_digit_value(long d);

/// Exact value of the word: sum of 1/(d_n * prod_{j<n} d_j(d_j-1)). The
/// periodic tail is a geometric series with ratio prod 1/(d(d-1)) and is
/// summed in closed form. Result lies in (0, 1].
Rat eval_word(const LurothWord& w);

/// Branch index of x in (0,1]: the unique d >= 2 with 1/d < x <= 1/(d-1),
/// computed by exact integer division. Throws std::domain_error outside
/// (0,1].
long digit_of(const Rat& x);

/// One step of the digit shift: T(x) = (d-1)(d x - 1) with d = digit_of(x).
/// Maps (0,1] onto (0,1] and never enlarges the denominator.
Rat luroth_map(const Rat& x);

/// Digit expansion of a rational in (0,1]. The orbit of x under the shift
/// stays on denominators dividing den(x), so it enters a cycle; the cycle
/// is detected on the exact orbit values and the result canonicalised.
/// Round trip: eval_word(expand(x)) == x.
LurothWord expand(const Rat& x);

/// Smallest member of the two-sided digit band [N1,N2] whose expansion
/// starts with d: the word d followed by repeating N2.
Rat chevron_left(long d, long N2);

/// Largest member starting with d: the word d followed by repeating N1.
Rat chevron_right(long d, long N1);

}  // namespace luroth
