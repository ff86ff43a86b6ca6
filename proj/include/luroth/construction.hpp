#pragma once

#include <optional>
#include <string>
#include <vector>

#include "luroth/digit_set.hpp"
#include "luroth/intervals.hpp"
#include "luroth/words.hpp"

namespace luroth {

/// One node of a general Cantor set derivation. Interior nodes carry the
/// removed open gap; the children partition the span exactly:
/// span = left u gap u right with left.lo == span.lo, right.hi == span.hi.
struct ConstructionNode {
  Interval span;
  long heap_index;  // root 1; children of i are 2i and 2i+1
  int level;
  std::optional<Interval> gap;  // engaged iff interior
  long left = -1, right = -1;   // indices into the node array
  bool is_interior() const { return gap.has_value(); }
};

/// Finite materialisation of a general Cantor set derivation. When
/// self_similar_leaves is set, every leaf continues as a proportional
/// copy of the root, and a tree materialised past one full period
/// determines the removal/retention extrema of the infinite construction
/// exactly (ratios are invariant under the affine copies).
class Construction {
 public:
  Construction(std::vector<ConstructionNode> nodes, bool self_similar, bool exact_period,
               std::string label)
      : nodes_(std::move(nodes)),
        self_similar_leaves_(self_similar),
        exact_period_(exact_period),
        label_(std::move(label)) {}

  const std::vector<ConstructionNode>& nodes() const { return nodes_; }
  const ConstructionNode& root() const { return nodes_.front(); }
  bool self_similar_leaves() const { return self_similar_leaves_; }
  /// True when the materialised interior nodes cover one full
  /// self-similarity period, making quantity extrema exact.
  bool exact_period() const { return exact_period_; }
  const std::string& label() const { return label_; }

  int depth() const;
  /// Union of the node spans at the given tree level (0 = root). All
  /// levels up to the materialised depth are complete.
  IntervalUnion level_union(int level) const;

 private:
  std::vector<ConstructionNode> nodes_;
  bool self_similar_leaves_;
  bool exact_period_;
  std::string label_;
};

/// Removal/retention extrema of a derivation, computed from the
/// definitions over the materialised interior nodes:
///   g   = max gap-to-interval ratio |O|/|I|,
///   h   = min child-retention ratio |child|/|I|,
///   tau = min of min(|left|,|right|)/|O|,
///   gamma = tau/(1+tau).
/// `exact` mirrors Construction::exact_period().
struct QuantityReport {
  Rat g, h, tau, gamma;
  long g_at = 0, h_at = 0, tau_at = 0;  // heap indices of the attaining nodes
  bool exact = false;
};

QuantityReport quantities(const Construction& d);

/// Band quantities straight from one period of spine lengths, without
/// materialising a tree. Exact: every node of the infinite construction
/// is an affine copy of a spine node, and the ratios are scale-invariant.
QuantityReport band_quantities(long N1, long N2);

/// Stepwise construction of the band set: level i completes the
/// restriction of the first digit to N1+i-1, splitting off the interval
/// of first digit exactly N1+i-1 on the right and recursing on the rest.
/// Right children and the final left leaf continue proportionally to the
/// root. depth >= 1 levels are materialised; one full period needs
/// depth >= N2-N1.
Construction scc(long N1, long N2, int depth);

/// Interval lengths along the stepwise spine at step i (1-based):
/// parent, left child, gap, right child. All exact.
struct LevelLengths {
  Rat main, left, gap, right;
};
LevelLengths scc_level_lengths(long N1, long N2, int i);

/// Thickness of the band set in closed form, evaluated both as the
/// chevron-endpoint quotient and as the expanded polynomial quotient;
/// the two routes are asserted equal.
Rat thickness_closed_form(long N1, long N2);
inline Rat gamma_closed_form(long N1, long N2) {
  const Rat t = thickness_closed_form(N1, N2);
  return t / (Rat(1) + t);
}

/// Orderedness certificate for the stepwise construction: both gap
/// differences at every interior step, nonnegative iff the gap lengths
/// never grow down the tree.
struct OrderedReport {
  struct Entry {
    int i;
    Rat delta_spine;  // |O at step i| - |O at step i+1|
    Rat delta_child;  // |O at step i| - |O inside the right child copy|
  };
  long N1, N2;
  std::vector<Entry> entries;
  bool ordered = true;
  std::vector<std::string> counterexamples;
};
OrderedReport verify_ordered(long N1, long N2);

/// Diameter (sup - inf) of the digit-restricted set.
Rat diameter(const DigitSet& ds);

/// Largest removed gap of the band construction: the level-1 gap, since
/// gap lengths strictly decrease down the spine and the copies shrink.
Rat max_gap(long N1, long N2);

/// Convex hull [inf, sup] of the band set.
Interval band_hull(long N1, long N2);

/// Ternary construction on [0,1]: every node removes its open middle
/// third. Sanity fixture.
Construction middle_thirds_fixture(int depth);

/// A digit-range split tree: node (lo..hi) splits at pivot p into the
/// (p+1..hi) child on the left (larger digits sit at smaller values) and
/// the (lo..p) child on the right. Singleton leaves continue as
/// proportional copies of the root.
struct RangeSplit {
  int level;
  long lo, pivot, hi;
};

/// Builds a construction from explicit digit-range splits over the band
/// [N1,N2]; endpoints are recomputed from the chevron formulas, never
/// stored. Throws when the splits do not form a tree rooted at (N1..N2).
Construction construction_from_splits(long N1, long N2, const std::vector<RangeSplit>& splits,
                                      std::string label);

/// Parses the JSON fixture document
///   {"N1":..,"N2":..,"splits":[[level,lo,pivot,hi],...],"checksum":"..."}
/// and rebuilds the tree. The checksum (FNV-1a 64 over the canonical
/// split list) guards against transcription damage.
Construction load_construction_fixture(const std::string& json_text);

/// The bundled unordered derivation of the band {3..26}, read from the
/// fixture file under LUROTH_DATA_DIR (environment, then compile-time
/// default).
Construction fixture_unordered_3_26();

/// Canonical checksum of a fixture's split list, as stored in the file.
std::string fixture_checksum(long N1, long N2, const std::vector<RangeSplit>& splits);

}  // namespace luroth
