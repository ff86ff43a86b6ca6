#pragma once

#include <optional>
#include <string>
#include <vector>

#include "luroth/construction.hpp"
#include "luroth/covers.hpp"
#include "luroth/digit_set.hpp"
#include "luroth/intervals.hpp"

namespace luroth {

/// Which published sumset criterion a report instantiates.
enum class Criterion { hall, hlavka_pair, hlavka_multi, astels_thickness, astels_sum };

std::string criterion_name(Criterion c);

/// Mechanically checked verdict: every hypothesis is evaluated in exact
/// arithmetic; the conclusion is certified only when all of them hold.
struct CheckReport {
  enum class Verdict { certified_interval, certified_thickness_bound, inconclusive };

  Criterion criterion;
  std::string inputs;
  struct Condition {
    std::string name;
    Rat lhs;
    std::string relation;  // "<=", "<", ">=", ">"
    Rat rhs;
    bool holds;
  };
  std::vector<Condition> conditions;
  Verdict verdict = Verdict::inconclusive;
  std::optional<Interval> interval;       // certified sum interval
  std::optional<Rat> thickness_bound;     // S/(1-S) fallback
  std::optional<double> dim_lower_bound;  // numeric side value of the fallback
  std::vector<std::string> notes;
  std::vector<std::string> discrepancies;

  bool certified() const { return verdict == Verdict::certified_interval; }
  bool all_conditions_hold() const;
  Condition& require(std::string name, Rat lhs, std::string relation, Rat rhs);
};

/// Everything the sumset criteria consume about one summand set:
/// removal/retention ratios of a derivation, the hull, the largest gap,
/// and the gamma-value tau/(1+tau).
struct SetSummary {
  std::string name;
  Rat g, h;
  Interval hull{Rat(0), Rat(1)};
  Rat largest_gap;
  Rat gamma;
};

/// Band summary with tau from the closed form and g/h from the stepwise
/// derivation's definitions.
SetSummary summarize_band(long N1, long N2);
/// Same, but without g/h (cheap; enough for the gap-based criteria).
SetSummary summarize_band_for_astels(long N1, long N2);
/// Summary of an explicit derivation (quantities over its tree).
SetSummary summarize_construction(const Construction& d);

/// Gap-domination criterion: every removed gap fits under both of its
/// neighbours in each derivation; certifies the full sum of hulls when
/// the hull lengths are within a factor of 3.
CheckReport hall_check(const Construction& a, const Construction& b);

/// Two-set removal/retention criterion: g_a g_b <= h_a h_b plus the two
/// cross length conditions certify sum = hull + hull.
CheckReport hlavka_pair_check(const SetSummary& a, const SetSummary& b);

/// n-set retention criterion: h_i <= |I_i|/|I_j| for all pairs and
/// g_i + h_i <= sum_j h_j for all i.
CheckReport hlavka_multi_check(const std::vector<SetSummary>& sets);

/// Thickness criterion on S = sum of gamma-values. S >= 1 with the
/// length conditions (every later hull at least as long as every earlier
/// largest gap; prefix hull sums dominating the next largest gap, for
/// some ordering of the summands) certifies sum = sum of hulls. S < 1
/// yields a thickness lower bound S/(1-S) and a dimension side value.
CheckReport astels_check(const std::vector<SetSummary>& sets);

/// Band size guaranteeing the ray set is approximated within eps:
/// gamma, diameter within eps below the ray diameter and the largest gap
/// within eps above its limit. The returned plan re-verifies all three
/// bounds exactly for the chosen N.
struct EpsilonPlan {
  long k;
  Rat epsilon;
  long N;
  std::vector<CheckReport::Condition> verified;  // the three bounds, exact
  bool all_hold = true;
};
EpsilonPlan choose_N(long k, const Rat& epsilon);

/// Composite result of a whole theorem-level verification.
struct DriverReport {
  std::string id;
  std::vector<CheckReport> sub;
  enum class Outcome { certified_congruent, certified_noncongruent, inconclusive };
  Outcome outcome = Outcome::inconclusive;
  std::optional<Interval> interval;          // certified sum interval
  std::optional<GapCertificate> gap_witness; // for certified_noncongruent
  std::optional<MemberCertificate> members;  // interval-nonemptiness witnesses
  std::vector<std::string> notes;
  std::vector<std::string> discrepancies;
  Rat epsilon;  // when an epsilon plan was used
  std::vector<long> chosen_N;

  bool decided() const { return outcome != Outcome::inconclusive; }
};

/// Sums of upper-bounded digit sets (digits <= k per summand). Dispatches
/// to the pair or multi criterion and falls back to a finite-level gap
/// search when no criterion applies.
DriverReport theorem1_driver(const std::vector<long>& ks);

/// Sums of lower-bounded digit sets (digits >= k_j). Checks the diameter
/// condition sum (k_j-1)/(k_j(k_j-1)-1) >= 1 and the growth condition
/// k_{j-1} <= k_j <= k_{j-1}^2 + 2 k_{j-1} + 2, picks a rational epsilon
/// strictly under every constraint family, approximates each ray by a
/// band, and certifies via the thickness criterion.
DriverReport theorem2_driver(const std::vector<long>& ks);

/// k-fold sum of the digits >= k set, via the band with top digit k^3:
/// k * gamma_{k,k^3} >= 1 exactly.
DriverReport corollary3_driver(long k);

/// Mixed sum: digits <= k+2 plus digits >= k.
DriverReport theorem4_driver(long k);

/// (k-1)-fold sums of digits >= k cannot reach every residue: the total
/// diameter (k-1)^2/((k-1)k-1) falls short of 1. k >= 3.
DriverReport optimality_check(long k);

/// Exact sign verification of the auxiliary inequalities behind the
/// closed-form thickness, swept over a digit-bound grid.
struct LemmaSweepReport {
  long n1_lo, n1_hi, n2_hi;
  long pairs_checked = 0;
  long conditions_checked = 0;
  std::vector<std::string> counterexamples;
  std::vector<std::string> notes;
  bool clean() const { return counterexamples.empty(); }
};
LemmaSweepReport lemma_sweep(long n1_lo, long n1_hi, long n2_hi);

}  // namespace luroth
