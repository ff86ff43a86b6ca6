#pragma once

#include <string>
#include <vector>

#include "luroth/construction.hpp"
#include "luroth/digit_set.hpp"
#include "luroth/intervals.hpp"
#include "luroth/words.hpp"

namespace luroth {

/// Closed cover of the band set after n full levels of its stepwise
/// construction (2^n intervals before merging, a superset of the set
/// itself; level 0 is the hull). Covers are nested in n and intersect to
/// the set. Throws std::length_error("depth too large") past the part
/// ceiling.
IntervalUnion level_cover(const DigitSet& band, int n, std::size_t max_parts = kDefaultMaxParts);

/// Certificate that two band sets' sum misses part of the circle: the sum
/// of finite-level covers is a superset of the sumset, so every gap of
/// its mod-1 image is a proof of non-congruence.
struct GapCertificate {
  long N1a, N2a, N1b, N2b;
  int depth_a, depth_b;
  std::size_t max_parts;
  IntervalUnion cover_a, cover_b;
  IntervalUnion sum;      // cover_a + cover_b before folding
  CircleSet folded;       // mod-1 image of the sum
  CircleGaps gaps;        // open complement on the circle
  bool certified_noncongruence() const { return !gaps.empty(); }
};

GapCertificate certify_gap(const DigitSet& band_a, int depth_a, const DigitSet& band_b,
                           int depth_b, std::size_t max_parts = kDefaultMaxParts);

/// Exact witness that a target value is a sum of members of given digit
/// sets: each word is checked against its claimed alphabet and the word
/// values are summed exactly.
struct MemberCertificate {
  struct Summand {
    LurothWord word;
    DigitSet alphabet;
    Rat value;
    bool digits_ok;
    long offending_digit;  // meaningful when !digits_ok
  };
  std::vector<Summand> summands;
  Rat sum;
  Rat target;
  bool verified;  // all alphabets respected and sum == target
};

MemberCertificate certify_member(const std::vector<std::pair<LurothWord, DigitSet>>& words,
                                 const Rat& target);

}  // namespace luroth
