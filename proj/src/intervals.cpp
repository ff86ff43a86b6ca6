#include "luroth/intervals.hpp"

#include <algorithm>
#include <stdexcept>

namespace luroth {

IntervalUnion IntervalUnion::of(std::vector<Interval> parts, std::size_t max_parts) {
  std::sort(parts.begin(), parts.end(),
            [](const Interval& a, const Interval& b) {
              return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
            });
  IntervalUnion out;
  for (auto& p : parts) {
    if (!out.parts_.empty() && p.lo <= out.parts_.back().hi) {
      if (p.hi > out.parts_.back().hi) out.parts_.back().hi = p.hi;
    } else {
      out.parts_.push_back(std::move(p));
    }
  }
  if (out.parts_.size() > max_parts)
    throw std::length_error("IntervalUnion: part count exceeds the configured ceiling");
  return out;
}

Interval IntervalUnion::hull() const {
  if (parts_.empty()) throw std::domain_error("IntervalUnion: hull of empty union");
  return Interval(parts_.front().lo, parts_.back().hi);
}

Rat IntervalUnion::total_length() const {
  Rat sum(0);
  for (const auto& p : parts_) sum += p.length();
  return sum;
}

bool IntervalUnion::contains(const Rat& x) const {
  // parts are sorted; first part whose hi >= x decides
  auto it = std::lower_bound(parts_.begin(), parts_.end(), x,
                             [](const Interval& p, const Rat& v) { return p.hi < v; });
  return it != parts_.end() && it->lo <= x;
}

bool IntervalUnion::subset_of(const IntervalUnion& other) const {
  size_t j = 0;
  for (const auto& p : parts_) {
    while (j < other.parts_.size() && other.parts_[j].hi < p.lo) ++j;
    if (j == other.parts_.size() || !(other.parts_[j].lo <= p.lo && p.hi <= other.parts_[j].hi))
      return false;
  }
  return true;
}

std::string IntervalUnion::str() const {
  if (parts_.empty()) return "{}";
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += " u ";
    out += parts_[i].str();
  }
  return out;
}

IntervalUnion minkowski(const IntervalUnion& u, const IntervalUnion& v, std::size_t max_parts) {
  if (u.empty() || v.empty()) return {};
  if (u.size() * v.size() > max_parts)
    throw std::length_error("minkowski: pairwise sum exceeds the configured part ceiling");
  std::vector<Interval> sums;
  sums.reserve(u.size() * v.size());
  for (const auto& a : u.parts())
    for (const auto& b : v.parts()) sums.push_back(a + b);
  return IntervalUnion::of(std::move(sums), max_parts);
}

IntervalUnion nfold(const IntervalUnion& u, int n, std::size_t max_parts) {
  if (n < 1) throw std::domain_error("nfold: n must be >= 1");
  IntervalUnion acc = u;
  for (int i = 1; i < n; ++i) acc = minkowski(acc, u, max_parts);
  return acc;
}

bool CircleSet::full() const {
  return parts.size() == 1 && parts.parts()[0].lo == Rat(0) && parts.parts()[0].hi == Rat(1);
}

Rat CircleSet::total_length() const {
  Rat len = parts.total_length();
  // [0,1] stands for the circle of circumference 1; the duplicated
  // endpoint never adds length since points are null sets.
  return len > Rat(1) ? Rat(1) : len;
}

CircleSet mod1(const IntervalUnion& u) {
  std::vector<Interval> pieces;
  for (const auto& p : u.parts()) {
    if (p.length() >= Rat(1)) {
      pieces.emplace_back(Rat(0), Rat(1));
      continue;
    }
    const mpz_class base = p.lo.floor();
    const Rat shift{base};
    const Rat lo = p.lo - shift;
    const Rat hi = p.hi - shift;  // hi <= lo + 1 < 2
    if (hi <= Rat(1)) {
      pieces.emplace_back(lo, hi);
    } else {
      pieces.emplace_back(lo, Rat(1));
      pieces.emplace_back(Rat(0), hi - Rat(1));
    }
  }
  // Identify the endpoints of the fundamental interval: reaching 1 means
  // covering the circle point 0 and vice versa.
  bool touches_zero = false, touches_one = false;
  for (const auto& p : pieces) {
    touches_zero |= (p.lo == Rat(0));
    touches_one |= (p.hi == Rat(1));
  }
  if (touches_one && !touches_zero) pieces.emplace_back(Rat(0), Rat(0));
  if (touches_zero && !touches_one) pieces.emplace_back(Rat(1), Rat(1));
  return CircleSet{IntervalUnion::of(std::move(pieces))};
}

CircleGaps gaps_mod1(const CircleSet& s) {
  CircleGaps out;
  if (s.full()) return out;
  if (s.parts.empty()) {
    out.gaps.emplace_back(Rat(0), Rat(1));
    out.wraps_at_zero = true;
    return out;
  }
  const auto& parts = s.parts.parts();
  Rat cursor(0);
  for (const auto& p : parts) {
    if (p.lo > cursor) out.gaps.emplace_back(cursor, p.lo);
    cursor = p.hi;
  }
  if (cursor < Rat(1)) out.gaps.emplace_back(cursor, Rat(1));
  // The stored set covers 0 iff it covers 1, so a gap abutting 0 pairs
  // with one abutting 1 exactly when the circle point 0 is uncovered.
  out.wraps_at_zero = !s.covers_zero();
  return out;
}

}  // namespace luroth
