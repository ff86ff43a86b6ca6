#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "luroth/intervals.hpp"

using namespace luroth;

namespace {

// Independent union oracle: +1/-1 endpoint sweep instead of sort-merge.
IntervalUnion sweep_union(std::vector<Interval> parts) {
  std::vector<std::pair<Rat, int>> events;
  for (const auto& p : parts) {
    events.emplace_back(p.lo, +1);
    events.emplace_back(p.hi, -1);
  }
  std::sort(events.begin(), events.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;  // opens before closes at the same point
  });
  std::vector<Interval> merged;
  int depth = 0;
  Rat open(0);
  for (const auto& [x, d] : events) {
    if (depth == 0 && d == +1) open = x;
    depth += d;
    if (depth == 0) {
      if (!merged.empty() && merged.back().hi == open)
        merged.back() = Interval(merged.back().lo, x);
      else
        merged.emplace_back(open, x);
    }
  }
  return IntervalUnion::of(std::move(merged));
}

IntervalUnion random_union(std::mt19937_64& rng, int max_parts_count, long max_den) {
  std::uniform_int_distribution<long> den(1, max_den);
  std::uniform_int_distribution<long> num(-3 * max_den, 3 * max_den);
  std::uniform_int_distribution<int> count(1, max_parts_count);
  std::vector<Interval> parts;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Rat a(num(rng), den(rng)), b(num(rng), den(rng));
    if (b < a) std::swap(a, b);
    parts.emplace_back(a, b);
  }
  return IntervalUnion::of(std::move(parts));
}

}  // namespace

TEST_CASE("interval basics") {
  CHECK_THROWS_AS(Interval(Rat(1), Rat(0)), std::domain_error);
  CHECK(Interval(Rat(1, 2), Rat(1, 2)).is_point());
  CHECK((Interval(Rat(0), Rat(1)) + Interval(Rat(1, 2), Rat(2))) == Interval(Rat(1, 2), Rat(3)));
}

TEST_CASE("normalisation merges touching and overlapping parts") {
  const auto u = IntervalUnion::of({{Rat(0), Rat(1, 2)}, {Rat(1, 2), Rat(1)}, {Rat(2), Rat(3)}});
  REQUIRE(u.size() == 2);
  CHECK(u.parts()[0] == Interval(Rat(0), Rat(1)));
  CHECK(u.parts()[1] == Interval(Rat(2), Rat(3)));
  CHECK(u.total_length() == Rat(2));
  CHECK(u.contains(Rat(1, 2)));
  CHECK(!u.contains(Rat(3, 2)));
  CHECK(u.hull() == Interval(Rat(0), Rat(3)));
}

TEST_CASE("normal form is idempotent and order-independent") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto u = random_union(rng, 6, 50);
    auto parts = u.parts();
    CHECK(IntervalUnion::of(parts) == u);
    std::shuffle(parts.begin(), parts.end(), rng);
    CHECK(IntervalUnion::of(parts) == u);
  }
}

TEST_CASE("minkowski sums") {
  const auto unit = IntervalUnion::single(Interval(Rat(0), Rat(1)));
  CHECK(minkowski(unit, unit) == IntervalUnion::single(Interval(Rat(0), Rat(2))));
  CHECK(nfold(IntervalUnion::single(Interval(Rat(2, 5), Rat(1))), 3) ==
        IntervalUnion::single(Interval(Rat(6, 5), Rat(3))));
  CHECK(nfold(unit, 1) == unit);
  CHECK(nfold(IntervalUnion::single(Interval(Rat(15, 239), Rat(2, 5))), 3) ==
        IntervalUnion::single(Interval(Rat(45, 239), Rat(6, 5))));
  CHECK_THROWS_AS(nfold(unit, 0), std::domain_error);
}

TEST_CASE("minkowski matches the sweep oracle on random unions") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const auto u = random_union(rng, 6, 50);
    const auto v = random_union(rng, 6, 50);
    std::vector<Interval> pairwise;
    for (const auto& a : u.parts())
      for (const auto& b : v.parts()) pairwise.push_back(a + b);
    CHECK(minkowski(u, v) == sweep_union(std::move(pairwise)));
  }
}

TEST_CASE("part ceiling is enforced, never silently truncated") {
  std::vector<Interval> parts;
  for (long i = 0; i < 40; ++i) parts.emplace_back(Rat(2 * i), Rat(2 * i) + Rat(1, 2));
  const auto u = IntervalUnion::of(parts);
  CHECK_THROWS_AS(minkowski(u, u, 100), std::length_error);
  CHECK_THROWS_AS(IntervalUnion::of(parts, 10), std::length_error);
}

TEST_CASE("mod-1 folding") {
  // a part reaching past an integer wraps; 2 lands on the circle point 0
  const auto folded = mod1(IntervalUnion::single(Interval(Rat(11, 10), Rat(2))));
  REQUIRE(folded.parts.size() == 2);
  CHECK(folded.parts.parts()[0] == Interval(Rat(0), Rat(0)));
  CHECK(folded.parts.parts()[1] == Interval(Rat(1, 10), Rat(1)));
  CHECK(folded.covers_zero());

  CHECK(mod1(IntervalUnion::single(Interval(Rat(0), Rat(1)))).full());
  CHECK(mod1(IntervalUnion::single(Interval(Rat(7, 3), Rat(11, 3)))).full());

  const auto gaps = gaps_mod1(IntervalUnion::of({{Rat(4, 5), Rat(1)}, {Rat(11, 10), Rat(2)}}));
  REQUIRE(gaps.gaps.size() == 1);
  CHECK(gaps.gaps[0] == Interval(Rat(0), Rat(1, 10)));
  CHECK(!gaps.wraps_at_zero);

  CHECK(gaps_mod1(IntervalUnion::single(Interval(Rat(0), Rat(1)))).empty());
}

TEST_CASE("mod-1 image of an interior set wraps its complement") {
  const auto gaps = gaps_mod1(IntervalUnion::single(Interval(Rat(1, 4), Rat(1, 2))));
  REQUIRE(gaps.gaps.size() == 2);
  CHECK(gaps.gaps[0] == Interval(Rat(0), Rat(1, 4)));
  CHECK(gaps.gaps[1] == Interval(Rat(1, 2), Rat(1)));
  CHECK(gaps.wraps_at_zero);
}

TEST_CASE("mod-1 length conservation") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto u = random_union(rng, 5, 30);
    const auto folded = mod1(u);
    CHECK(folded.total_length() <= min(Rat(1), u.total_length()));
    // a union inside one integer translate folds without loss
    const Interval h = u.hull();
    if (h.length() < Rat(1)) {
      const Rat base{h.lo.floor()};
      if (h.hi <= base + Rat(1)) CHECK(folded.total_length() == u.total_length());
    }
  }
}
