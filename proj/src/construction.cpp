#include "luroth/construction.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#ifndef LUROTH_DATA_DIR
#define LUROTH_DATA_DIR "."
#endif

namespace luroth {

namespace {

void require_band(long N1, long N2) {
  if (N1 < 2 || N2 <= N1) throw std::domain_error("band requires 2 <= N1 < N2");
}

}  // namespace

int Construction::depth() const {
  int d = 0;
  for (const auto& n : nodes_) d = std::max(d, n.level);
  return d;
}

IntervalUnion Construction::level_union(int level) const {
  std::vector<Interval> parts;
  for (const auto& n : nodes_) {
    if (n.level == level) parts.push_back(n.span);
    // a leaf above the requested level still covers its column
    else if (n.level < level && !n.is_interior())
      parts.push_back(n.span);
  }
  if (parts.empty()) throw std::domain_error("level_union: level not materialised");
  return IntervalUnion::of(std::move(parts));
}

QuantityReport quantities(const Construction& d) {
  if (d.nodes().empty()) throw std::domain_error("quantities: empty construction");
  QuantityReport r;
  bool first = true;
  for (const auto& n : d.nodes()) {
    if (!n.is_interior()) continue;
    const Rat len = n.span.length();
    const Rat gap = n.gap->length();
    const Rat left = d.nodes()[static_cast<size_t>(n.left)].span.length();
    const Rat right = d.nodes()[static_cast<size_t>(n.right)].span.length();
    const Rat g_ratio = gap / len;
    const Rat h_ratio = min(left, right) / len;
    const Rat t_ratio = min(left, right) / gap;
    if (first || g_ratio > r.g) { r.g = g_ratio; r.g_at = n.heap_index; }
    if (first || h_ratio < r.h) { r.h = h_ratio; r.h_at = n.heap_index; }
    if (first || t_ratio < r.tau) { r.tau = t_ratio; r.tau_at = n.heap_index; }
    first = false;
  }
  if (first) throw std::domain_error("quantities: construction has no interior node");
  r.gamma = r.tau / (Rat(1) + r.tau);
  r.exact = d.exact_period();
  return r;
}

QuantityReport band_quantities(long N1, long N2) {
  require_band(N1, N2);
  QuantityReport r;
  bool first = true;
  long heap = 1;  // spine heap indices run 1, 2, 4, ...
  for (int i = 1; i <= static_cast<int>(N2 - N1); ++i, heap *= 2) {
    const auto len = scc_level_lengths(N1, N2, i);
    const Rat g_ratio = len.gap / len.main;
    const Rat h_ratio = min(len.left, len.right) / len.main;
    const Rat t_ratio = min(len.left, len.right) / len.gap;
    if (first || g_ratio > r.g) { r.g = g_ratio; r.g_at = heap; }
    if (first || h_ratio < r.h) { r.h = h_ratio; r.h_at = heap; }
    if (first || t_ratio < r.tau) { r.tau = t_ratio; r.tau_at = heap; }
    first = false;
  }
  r.gamma = r.tau / (Rat(1) + r.tau);
  r.exact = true;
  return r;
}

namespace {

// Affine map sending the canonical interval onto the node span.
Rat remap(const Rat& t, const Interval& canon, const Interval& span) {
  return span.lo + (t - canon.lo) * (span.length() / canon.length());
}

// Canonical spine interval after `phase` completed digit restrictions:
// [ smallest element , largest element with first digit >= N1+phase ].
Interval spine_interval(long N1, long N2, long phase) {
  return Interval(chevron_left(N2, N2), chevron_right(N1 + phase, N1));
}

}  // namespace

Construction scc(long N1, long N2, int depth) {
  require_band(N1, N2);
  if (depth < 1) throw std::domain_error("scc: depth must be >= 1");
  if (depth > 22) throw std::length_error("scc: materialised depth too large");
  const long period = N2 - N1;

  std::vector<ConstructionNode> nodes;
  // Expands the node in place; `phase` identifies which spine shape this
  // span is an affine copy of.
  std::function<void(size_t, long)> grow = [&](size_t at, long phase) {
    ConstructionNode& n = nodes[at];
    if (n.level >= depth) return;
    const Interval canon = spine_interval(N1, N2, phase);
    const long d = N1 + phase;  // digit completed at this step
    const Interval canon_left = spine_interval(N1, N2, phase + 1);
    const Interval canon_right(chevron_left(d, N2), chevron_right(d, N1));
    const Interval span = n.span;
    auto m = [&](const Rat& t) { return remap(t, canon, span); };

    const Interval left(span.lo, m(canon_left.hi));
    const Interval right(m(canon_right.lo), span.hi);
    nodes[at].gap = Interval(left.hi, right.lo);

    const long left_phase = (phase + 1 < period) ? phase + 1 : 0;
    const int lvl = nodes[at].level + 1;
    const long hi_idx = nodes[at].heap_index;
    nodes[at].left = static_cast<long>(nodes.size());
    nodes.push_back({left, 2 * hi_idx, lvl, std::nullopt, -1, -1});
    nodes[at].right = static_cast<long>(nodes.size());
    nodes.push_back({right, 2 * hi_idx + 1, lvl, std::nullopt, -1, -1});
    grow(static_cast<size_t>(nodes[at].left), left_phase);
    grow(static_cast<size_t>(nodes[at].right), 0);
  };

  nodes.push_back({spine_interval(N1, N2, 0), 1, 0, std::nullopt, -1, -1});
  grow(0, 0);

  const bool exact = depth >= period;
  return Construction(std::move(nodes), /*self_similar=*/true, exact,
                      "scc(" + std::to_string(N1) + "," + std::to_string(N2) + ")");
}

LevelLengths scc_level_lengths(long N1, long N2, int i) {
  require_band(N1, N2);
  if (i < 1 || i > N2 - N1) throw std::domain_error("scc_level_lengths: step out of range");
  const long d = N1 + i;
  LevelLengths out{
      chevron_right(d - 1, N1) - chevron_left(N2, N2),
      chevron_right(d, N1) - chevron_left(N2, N2),
      chevron_left(d - 1, N2) - chevron_right(d, N1),
      chevron_right(d - 1, N1) - chevron_left(d - 1, N2),
  };
  return out;
}

Rat thickness_closed_form(long N1, long N2) {
  require_band(N1, N2);
  const Rat chevron_form = (chevron_right(N2, N1) - chevron_left(N2, N2)) /
                           (chevron_left(N2 - 1, N2) - chevron_right(N2, N1));
  const mpz_class a(N1), b(N2);
  const mpz_class num = (b - a) * (b - 2) * (a * b - a - b + 2);
  const mpz_class den =
      a * a * (b * b * b - 2 * b * b + 2) - a * (2 * b * b * b - 5 * b * b + b + 4) - (b * b - b);
  const Rat poly_form(num, den);
  if (chevron_form != poly_form)
    throw std::logic_error("thickness_closed_form: the two printed forms disagree");
  return chevron_form;
}

OrderedReport verify_ordered(long N1, long N2) {
  require_band(N1, N2);
  OrderedReport r;
  r.N1 = N1;
  r.N2 = N2;
  // Copies preserve gap ratios, so one period of spine comparisons
  // decides the whole tree: the next spine gap and the first gap inside
  // the proportional right-child copy must both fit under the current gap.
  const Rat root_len = spine_interval(N1, N2, 0).length();
  const Rat first_gap = scc_level_lengths(N1, N2, 1).gap;
  const Rat alpha = first_gap / root_len;
  for (int i = 1; i <= static_cast<int>(N2 - N1) - 1; ++i) {
    const auto cur = scc_level_lengths(N1, N2, i);
    const auto next = scc_level_lengths(N1, N2, i + 1);
    OrderedReport::Entry e;
    e.i = i;
    e.delta_spine = cur.gap - next.gap;
    e.delta_child = cur.gap - alpha * cur.right;
    if (e.delta_spine.sign() < 0 || e.delta_child.sign() < 0) {
      r.ordered = false;
      r.counterexamples.push_back("step " + std::to_string(i) + ": spine " +
                                  e.delta_spine.str() + ", child " + e.delta_child.str());
    }
    r.entries.push_back(std::move(e));
  }
  // Last spine node: its children are plain copies of the root, whose
  // first gaps scale by the child ratio.
  {
    const auto last = scc_level_lengths(N1, N2, static_cast<int>(N2 - N1));
    OrderedReport::Entry e;
    e.i = static_cast<int>(N2 - N1);
    e.delta_spine = last.gap - alpha * last.left;
    e.delta_child = last.gap - alpha * last.right;
    if (e.delta_spine.sign() < 0 || e.delta_child.sign() < 0) {
      r.ordered = false;
      r.counterexamples.push_back("final step: " + e.delta_spine.str() + ", " +
                                  e.delta_child.str());
    }
    r.entries.push_back(std::move(e));
  }
  return r;
}

Rat diameter(const DigitSet& ds) {
  switch (ds.kind()) {
    case DigitSet::Kind::ray:
      return periodic_digit_value(ds.lo());
    case DigitSet::Kind::band:
    case DigitSet::Kind::finite:
      // sup has all digits at the smallest value, inf at the largest
      return periodic_digit_value(ds.lo()) - periodic_digit_value(ds.hi());
  }
  throw std::logic_error("diameter: unreachable");
}

Rat max_gap(long N1, long N2) {
  require_band(N1, N2);
  return chevron_left(N1, N2) - chevron_right(N1 + 1, N1);
}

Interval band_hull(long N1, long N2) {
  require_band(N1, N2);
  return Interval(chevron_left(N2, N2), chevron_right(N1, N1));
}

Construction middle_thirds_fixture(int depth) {
  if (depth < 1) throw std::domain_error("middle_thirds_fixture: depth must be >= 1");
  std::vector<ConstructionNode> nodes;
  std::function<void(size_t)> grow = [&](size_t at) {
    if (nodes[at].level >= depth) return;
    const Interval span = nodes[at].span;
    const Rat w = span.length() / Rat(3);
    const Interval left(span.lo, span.lo + w);
    const Interval right(span.hi - w, span.hi);
    nodes[at].gap = Interval(left.hi, right.lo);
    const int lvl = nodes[at].level + 1;
    const long hi_idx = nodes[at].heap_index;
    nodes[at].left = static_cast<long>(nodes.size());
    nodes.push_back({left, 2 * hi_idx, lvl, std::nullopt, -1, -1});
    nodes[at].right = static_cast<long>(nodes.size());
    nodes.push_back({right, 2 * hi_idx + 1, lvl, std::nullopt, -1, -1});
    grow(static_cast<size_t>(nodes[at].left));
    grow(static_cast<size_t>(nodes[at].right));
  };
  nodes.push_back({Interval(Rat(0), Rat(1)), 1, 0, std::nullopt, -1, -1});
  grow(0);
  return Construction(std::move(nodes), /*self_similar=*/true, /*exact_period=*/true,
                      "middle_thirds");
}

Construction construction_from_splits(long N1, long N2, const std::vector<RangeSplit>& splits,
                                      std::string label) {
  require_band(N1, N2);
  // Digit range (lo..hi) covers the span [ <hi , lo> ].
  auto range_interval = [&](long lo, long hi) {
    return Interval(chevron_left(hi, N2), chevron_right(lo, N1));
  };
  std::map<std::pair<long, long>, const RangeSplit*> by_range;
  for (const auto& s : splits) {
    if (s.lo > s.pivot || s.pivot >= s.hi)
      throw std::domain_error("fixture split must satisfy lo <= pivot < hi");
    if (!by_range.emplace(std::make_pair(s.lo, s.hi), &s).second)
      throw std::domain_error("fixture split listed twice");
  }

  std::vector<ConstructionNode> nodes;
  size_t used = 0;
  std::function<void(size_t, long, long)> grow = [&](size_t at, long lo, long hi) {
    auto it = by_range.find({lo, hi});
    if (it == by_range.end()) {
      if (lo != hi)
        throw std::domain_error("fixture is missing a split for a non-singleton range");
      return;  // singleton leaf, continues proportionally to the root
    }
    const RangeSplit& s = *it->second;
    if (s.level != nodes[at].level)
      throw std::domain_error("fixture split level disagrees with the tree position");
    ++used;
    const long p = s.pivot;
    const Interval left = range_interval(p + 1, hi);
    const Interval right = range_interval(lo, p);
    nodes[at].gap = Interval(left.hi, right.lo);
    const int lvl = nodes[at].level + 1;
    const long hi_idx = nodes[at].heap_index;
    nodes[at].left = static_cast<long>(nodes.size());
    nodes.push_back({left, 2 * hi_idx, lvl, std::nullopt, -1, -1});
    nodes[at].right = static_cast<long>(nodes.size());
    nodes.push_back({right, 2 * hi_idx + 1, lvl, std::nullopt, -1, -1});
    grow(static_cast<size_t>(nodes[at].left), p + 1, hi);
    grow(static_cast<size_t>(nodes[at].right), lo, p);
  };

  nodes.push_back({range_interval(N1, N2), 1, 0, std::nullopt, -1, -1});
  grow(0, N1, N2);
  if (used != splits.size()) throw std::domain_error("fixture contains unreachable splits");
  return Construction(std::move(nodes), /*self_similar=*/true, /*exact_period=*/true,
                      std::move(label));
}

namespace {

std::string canonical_split_text(long N1, long N2, const std::vector<RangeSplit>& splits) {
  std::ostringstream os;
  os << N1 << ';' << N2;
  for (const auto& s : splits) os << ';' << s.level << ',' << s.lo << ',' << s.pivot << ',' << s.hi;
  return os.str();
}

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

std::string fixture_checksum(long N1, long N2, const std::vector<RangeSplit>& splits) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(fnv1a64(canonical_split_text(N1, N2, splits))));
  return buf;
}

Construction load_construction_fixture(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("fixture parse error: ") + e.what());
  }
  const long N1 = j.at("N1").get<long>();
  const long N2 = j.at("N2").get<long>();
  std::vector<RangeSplit> splits;
  for (const auto& row : j.at("splits")) {
    if (!row.is_array() || row.size() != 4)
      throw std::runtime_error("fixture split rows must be [level, lo, pivot, hi]");
    splits.push_back({row[0].get<int>(), row[1].get<long>(), row[2].get<long>(), row[3].get<long>()});
  }
  const std::string expect = j.at("checksum").get<std::string>();
  if (expect != fixture_checksum(N1, N2, splits))
    throw std::runtime_error("fixture checksum mismatch: file is corrupt");
  std::string label = j.value("name", "fixture");
  return construction_from_splits(N1, N2, splits, std::move(label));
}

Construction fixture_unordered_3_26() {
  std::string dir = LUROTH_DATA_DIR;
  if (const char* env = std::getenv("LUROTH_DATA_DIR")) dir = env;
  const std::string path = dir + "/luroth_3_26.json";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_construction_fixture(buf.str());
}

}  // namespace luroth
