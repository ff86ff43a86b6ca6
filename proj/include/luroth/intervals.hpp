#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "luroth/rational.hpp"

namespace luroth {

/// Closed rational interval [lo, hi]; degenerate points (lo == hi) allowed.
struct Interval {
  Rat lo, hi;

  Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::domain_error("Interval: lo > hi");
  }

  Rat length() const { return hi - lo; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  bool is_point() const { return lo == hi; }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo + b.lo, a.hi + b.hi);
  }
  friend bool operator==(const Interval&, const Interval&) = default;

  std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }
};

/// Default ceiling on the number of parts a cover computation may produce.
inline constexpr std::size_t kDefaultMaxParts = std::size_t{1} << 20;

/// Sorted union of pairwise disjoint closed intervals with strictly
/// positive separation between consecutive parts (touching parts merge),
/// so every set has exactly one representation.
class IntervalUnion {
 public:
  IntervalUnion() = default;

  /// Normalises an arbitrary collection: sort, merge overlapping or
  /// touching parts. Throws std::length_error when the normal form would
  /// exceed max_parts.
  static IntervalUnion of(std::vector<Interval> parts, std::size_t max_parts = kDefaultMaxParts);

  static IntervalUnion single(Interval iv) { return of({std::move(iv)}); }

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }

  /// Convex hull [min lo, max hi]; throws when empty.
  Interval hull() const;

  Rat total_length() const;
  bool contains(const Rat& x) const;
  /// True when every part of this union lies inside some part of other.
  bool subset_of(const IntervalUnion& other) const;

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

  std::string str() const;

 private:
  std::vector<Interval> parts_;
};

/// Minkowski sum {u + v}: pairwise interval sums, then normalisation.
IntervalUnion minkowski(const IntervalUnion& u, const IntervalUnion& v,
                        std::size_t max_parts = kDefaultMaxParts);

/// n-fold sum U + ... + U; n >= 1.
IntervalUnion nfold(const IntervalUnion& u, int n, std::size_t max_parts = kDefaultMaxParts);

/// A closed subset of the circle R/Z, stored as a normalised union inside
/// the fundamental interval [0,1] with the identification 1 == 0: the
/// stored set covers 1 exactly when it covers 0.
struct CircleSet {
  IntervalUnion parts;  // within [0,1]

  /// Whole circle?
  bool full() const;
  bool covers_zero() const { return parts.contains(Rat(0)); }
  Rat total_length() const;
};

/// Folds every part of u into the circle: split at integers, translate
/// into [0,1], identify 1 with 0, normalise.
CircleSet mod1(const IntervalUnion& u);

/// Open complement of a circle set. Each entry (lo, hi) stands for the
/// open interval (lo, hi) of the circle; when the circle point 0 itself is
/// uncovered, the complement wraps and the two fundamental-domain pieces
/// adjacent to 0 and 1 are reported separately with wraps_at_zero set.
struct CircleGaps {
  std::vector<Interval> gaps;  // open intervals, endpoints in [0,1]
  bool wraps_at_zero = false;

  bool empty() const { return gaps.empty(); }
};

CircleGaps gaps_mod1(const CircleSet& s);
inline CircleGaps gaps_mod1(const IntervalUnion& u) { return gaps_mod1(mod1(u)); }

}  // namespace luroth
