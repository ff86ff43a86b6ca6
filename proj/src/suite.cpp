#include "luroth/suite.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "luroth/criteria.hpp"
#include "luroth/dimension.hpp"
#include "luroth/json_io.hpp"

namespace luroth {

namespace {

struct Catalogue {
  VerificationSuite suite;
  std::string filter;

  bool wants(const std::string& section) const { return filter.empty() || filter == section; }

  void add(SuiteEntry e) {
    switch (e.status) {
      case SuiteEntry::Status::match: ++suite.matches; break;
      case SuiteEntry::Status::mismatch: ++suite.mismatches; break;
      case SuiteEntry::Status::flagged_discrepancy: ++suite.flagged; break;
    }
    suite.entries.push_back(std::move(e));
  }

  void claim(const std::string& section, const std::string& id, const std::string& command,
             const std::string& provenance, const std::string& expected,
             const std::string& actual, const std::string& note = "") {
    if (!wants(section)) return;
    SuiteEntry e{id, section, command, expected, actual, provenance,
                 expected == actual ? SuiteEntry::Status::match : SuiteEntry::Status::mismatch,
                 note};
    add(std::move(e));
  }

  // A published value that conflicts with the defining formula: both
  // values are reported and the entry never fails the suite.
  void flagged(const std::string& section, const std::string& id, const std::string& command,
               const std::string& published, const std::string& definitional,
               const std::string& note) {
    if (!wants(section)) return;
    SuiteEntry e{id,
                 section,
                 command,
                 "published " + published + " / definitional " + definitional,
                 definitional,
                 "published",
                 published == definitional ? SuiteEntry::Status::match
                                           : SuiteEntry::Status::flagged_discrepancy,
                 note};
    add(std::move(e));
  }
};

std::string outcome_str(const DriverReport& r) {
  switch (r.outcome) {
    case DriverReport::Outcome::certified_congruent: return "certified_congruent";
    case DriverReport::Outcome::certified_noncongruent: return "certified_noncongruent";
    case DriverReport::Outcome::inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace

std::vector<std::string> suite_sections() {
  return {"words", "quantities", "thickness", "covers", "sums",
          "fixtures", "drivers", "lemmas", "dimension"};
}

VerificationSuite run_suite(const std::string& section_filter) {
  Catalogue cat;
  cat.filter = section_filter;

  // ---- words ----
  if (cat.wants("words")) {
    cat.claim("words", "expand-1over2", "luroth expand 1/2", "published", "[3 | 2]",
              "[" + [] {
                const auto w = expand(Rat(1, 2));
                std::string s;
                for (long d : w.preperiod) s += std::to_string(d) + " ";
                s += "| ";
                for (long d : w.period) s += std::to_string(d);
                return s;
              }() + "]");
    cat.claim("words", "eval-3-3-rep2", "luroth eval '{\"preperiod\":[3,3],\"period\":[2]}'",
              "published", "5/12", eval_word(canonical_word({3, 3}, {2})).str());
    cat.claim("words", "eval-rep2", "luroth eval '{\"preperiod\":[],\"period\":[2]}'", "published",
              "1", eval_word(canonical_word({}, {2})).str());
    cat.claim("words", "expand-12over41", "luroth expand 12/41", "derived", "[4 2 42 | 2]",
              "[" + [] {
                const auto w = expand(Rat(12, 41));
                std::string s;
                for (long d : w.preperiod) s += std::to_string(d) + " ";
                s += "| ";
                for (long d : w.period) s += std::to_string(d);
                return s;
              }() + "]");
    cat.claim("words", "roundtrip-12over41", "luroth expand 12/41", "derived", "12/41",
              eval_word(expand(Rat(12, 41))).str());
  }

  // ---- quantities ----
  if (cat.wants("quantities")) {
    const auto q3 = band_quantities(2, 3);
    const auto q4 = band_quantities(2, 4);
    const auto q5 = band_quantities(2, 5);
    cat.claim("quantities", "hull-le3", "luroth thickness 2 3", "published", "[2/5, 1]",
              band_hull(2, 3).str());
    cat.claim("quantities", "hull-le4", "luroth thickness 2 4", "published", "[3/11, 1]",
              band_hull(2, 4).str());
    cat.claim("quantities", "hull-le5", "luroth thickness 2 5", "published", "[4/19, 1]",
              band_hull(2, 5).str());
    cat.claim("quantities", "first-gap-le3", "luroth thickness 2 3", "published", "(1/2, 7/10)",
              "(" + scc(2, 3, 1).root().gap->lo.str() + ", " + scc(2, 3, 1).root().gap->hi.str() +
                  ")");
    cat.claim("quantities", "g3", "luroth thickness 2 3", "published", "1/3", q3.g.str());
    cat.claim("quantities", "h3", "luroth thickness 2 3", "published", "1/6", q3.h.str());
    cat.claim("quantities", "g4", "luroth thickness 2 4", "published", "1/5", q4.g.str());
    cat.claim("quantities", "h4", "luroth thickness 2 4", "published", "4/15", q4.h.str());
    cat.claim("quantities", "h5", "luroth thickness 2 5", "published", "9/28", q5.h.str());
    cat.flagged("quantities", "g5-definition-check", "luroth thickness 2 5", "1/7", q5.g.str(),
                "published removal ratio for the top-5 band; the defining supremum is computed "
                "from the derivation and happens to agree (the spine ratios are 2/15, 4/33, "
                "1/7)");
    cat.claim("quantities", "diam-le4", "luroth thickness 2 4", "published", "8/11",
              diameter(DigitSet::band(2, 4)).str());
    cat.claim("quantities", "diam-le5", "luroth thickness 2 5", "published", "15/19",
              diameter(DigitSet::band(2, 5)).str());
  }

  // ---- thickness ----
  if (cat.wants("thickness")) {
    cat.flagged("thickness", "tau-le3", "luroth thickness 2 3", "1/7",
                thickness_closed_form(2, 3).str(),
                "published table value; the closed form and the ratio minimum both give 1/2 "
                "(the published 1/7 matches neither, and for the 4- and 5-bands the published "
                "numbers coincide with gamma, not tau)");
    cat.flagged("thickness", "tau-le4", "luroth thickness 2 4", "4/7",
                thickness_closed_form(2, 4).str(),
                "published table value coincides with gamma = tau/(1+tau)");
    cat.flagged("thickness", "tau-le5", "luroth thickness 2 5", "9/13",
                thickness_closed_form(2, 5).str(),
                "published table value coincides with gamma = tau/(1+tau)");
    bool family_ok = true;
    for (long k = 1; k <= 50; ++k)
      family_ok = family_ok &&
                  thickness_closed_form(2, k + 2) == Rat(mpz_class(k) * k, mpz_class(k) + 1);
    cat.claim("thickness", "tau-2-family", "luroth verify lemmas", "published",
              "tau(2,k+2) = k^2/(k+1) for k=1..50", family_ok
                  ? "tau(2,k+2) = k^2/(k+1) for k=1..50"
                  : "counterexample found");
    cat.claim("thickness", "gamma-3-16", "luroth thickness 3 16", "published", "2821/8440",
              gamma_closed_form(3, 16).str());
    cat.claim("thickness", "tau-3-16", "luroth thickness 3 16", "derived", "2821/5619",
              thickness_closed_form(3, 16).str());
  }

  // ---- covers ----
  if (cat.wants("covers")) {
    cat.claim("covers", "le3-level1", "luroth gap 2 3 2 3 --depths 1 1", "published",
              "[2/5, 1/2] u [7/10, 1]", level_cover(DigitSet::band(2, 3), 1).str());
    cat.claim("covers", "le3-level2", "luroth gap 2 3 2 3 --depths 2 2", "published",
              "[2/5, 5/12] u [9/20, 1/2] u [7/10, 3/4] u [17/20, 1]",
              level_cover(DigitSet::band(2, 3), 2).str());
    cat.claim("covers", "le3-level3-parts", "luroth figure scc 2 3 3 -o scc.svg", "published", "8",
              std::to_string(level_cover(DigitSet::band(2, 3), 3).size()));
    cat.claim("covers", "le4-level4-parts", "luroth figure scc 2 4 4 -o scc.svg", "published", "16",
              std::to_string(level_cover(DigitSet::band(2, 4), 4).size()));
    cat.claim("covers", "le4-level0", "luroth gap 2 4 2 4 --depths 0 0", "published", "[3/11, 1]",
              level_cover(DigitSet::band(2, 4), 0).str());
  }

  // ---- sums ----
  if (cat.wants("sums")) {
    const auto b23 = DigitSet::band(2, 3);
    const auto b24 = DigitSet::band(2, 4);
    const auto s1 = minkowski(level_cover(b23, 1), level_cover(b23, 1));
    cat.claim("sums", "le3-sum-level1", "luroth gap 2 3 2 3 --depths 1 1", "published",
              "[4/5, 1] u [11/10, 2]", s1.str());
    const auto s2 = minkowski(level_cover(b23, 2), level_cover(b23, 2));
    cat.claim("sums", "le3-sum-level2", "luroth gap 2 3 2 3 --depths 2 2", "published",
              "[4/5, 5/6] u [17/20, 1] u [11/10, 3/2] u [31/20, 2]", s2.str());
    const auto g1 = certify_gap(b23, 1, b23, 1);
    cat.claim("sums", "le3-gap-depth1", "luroth gap 2 3 2 3 --depths 1 1", "published",
              "(0, 1/10)", g1.gaps.gaps.size() == 1
                  ? "(" + g1.gaps.gaps[0].lo.str() + ", " + g1.gaps.gaps[0].hi.str() + ")"
                  : "unexpected gap count");
    const auto g2 = certify_gap(b23, 2, b23, 2);
    {
      std::string got;
      for (const auto& g : g2.gaps.gaps) got += "(" + g.lo.str() + ", " + g.hi.str() + ") ";
      cat.claim("sums", "le3-gaps-depth2", "luroth gap 2 3 2 3 --depths 2 2", "published",
                "(0, 1/10) (1/2, 11/20) ", got);
    }
    const auto g34 = certify_gap(b23, 3, b24, 4);
    cat.claim("sums", "le3-le4-cover", "luroth gap 2 3 2 4 --depths 3 4", "published",
              "[37/55, 49/72] u [899/1320, 2]", g34.sum.str());
    cat.claim("sums", "le3-le4-mod1-gapfree", "luroth gap 2 3 2 4 --depths 3 4", "derived",
              "no gap", g34.gaps.empty() ? "no gap" : "gap found");
    const auto m1 = certify_member({{canonical_word({}, {3}), b23}, {canonical_word({}, {4}), b24}},
                                   Rat(37, 55));
    cat.claim("sums", "member-37over55", "luroth verify theorem1 --pair 3 4", "published",
              "verified", m1.verified ? "verified" : "failed");
    const auto m2 = certify_member({{canonical_word({}, {2}), b23}, {canonical_word({}, {2}), b24}},
                                   Rat(2));
    cat.claim("sums", "member-2", "luroth verify theorem1 --pair 3 4", "published", "verified",
              m2.verified ? "verified" : "failed");
    const auto m3 = certify_member(
        {{canonical_word({}, {7}), DigitSet::ray(3)}, {canonical_word({}, {7}), DigitSet::ray(3)}},
        Rat(12, 41));
    cat.claim("sums", "member-12over41", "luroth expand 12/41", "published", "verified",
              m3.verified ? "verified" : "failed");
  }

  // ---- fixtures ----
  if (cat.wants("fixtures")) {
    const auto fx = fixture_unordered_3_26();
    const auto q = quantities(fx);
    cat.claim("fixtures", "root-3-26", "luroth verify corollary3 -k 3", "published", "[25/649, 2/5]",
              fx.root().span.str());
    cat.claim("fixtures", "root-3-16", "luroth thickness 3 16", "published", "[15/239, 2/5]",
              band_hull(3, 16).str());
    cat.flagged("fixtures", "g-3-26", "luroth verify corollary3 -k 3", "24989/54314", q.g.str(),
                "published value; the defining supremum over the fixture tree agrees (attained "
                "at the {25,26} split)");
    cat.flagged("fixtures", "h-3-26", "luroth verify corollary3 -k 3", "391/1689", q.h.str(),
                "published value; the defining minimum over the fixture tree agrees, attained at "
                "the {6} child of the {5,6} split, whose parent length is the published "
                "denominator read as a parent interval rather than as printed");
    const auto sums = std::vector<SetSummary>(3, summarize_construction(fx));
    const auto rep = hlavka_multi_check(sums);
    cat.claim("fixtures", "triple-3-26", "luroth verify corollary3 -k 3", "published",
              "[75/649, 6/5]", rep.certified() ? rep.interval->str() : "not certified");
    const auto astels16 = astels_check(std::vector<SetSummary>(3, summarize_band_for_astels(3, 16)));
    cat.claim("fixtures", "triple-3-16", "luroth thickness 3 16", "published", "[45/239, 6/5]",
              astels16.certified() ? astels16.interval->str() : "not certified");
    cat.claim("fixtures", "triple-3-16-length", "luroth thickness 3 16", "published", "1209/1195",
              astels16.certified() ? astels16.interval->length().str() : "-");
  }

  // ---- drivers ----
  if (cat.wants("drivers")) {
    const auto t35 = theorem1_driver({3, 5});
    cat.claim("drivers", "pair-3-5", "luroth verify theorem1 --pair 3 5", "published",
              "certified_congruent [58/95, 2]",
              outcome_str(t35) + (t35.interval ? " " + t35.interval->str() : ""));
    const auto t44 = theorem1_driver({4, 4});
    cat.claim("drivers", "pair-4-4", "luroth verify theorem1 --pair 4 4", "published",
              "certified_congruent [6/11, 2]",
              outcome_str(t44) + (t44.interval ? " " + t44.interval->str() : ""));
    const auto t333 = theorem1_driver({3, 3, 3});
    cat.claim("drivers", "triple-3-3-3", "luroth verify theorem1 --triple 3 3 3", "published",
              "certified_congruent [6/5, 3]",
              outcome_str(t333) + (t333.interval ? " " + t333.interval->str() : ""));
    const auto t33 = theorem1_driver({3, 3});
    cat.claim("drivers", "pair-3-3", "luroth verify theorem1 --pair 3 3", "published",
              "certified_noncongruent", outcome_str(t33));
    const auto t2a = theorem2_driver({3, 3, 5});
    cat.claim("drivers", "rays-3-3-5", "luroth verify theorem2 --ks 3 3 5", "published",
              "certified_congruent", outcome_str(t2a));
    const auto t2b = theorem2_driver({3, 4, 5, 6});
    cat.claim("drivers", "rays-3-4-5-6", "luroth verify theorem2 --ks 3 4 5 6", "published",
              "certified_congruent", outcome_str(t2b));
    const auto t2c = theorem2_driver({3, 4, 5, 9, 245});
    cat.claim("drivers", "rays-growth-violation", "luroth verify theorem2 --ks 3 4 5 9 245",
              "published", "inconclusive", outcome_str(t2c),
              "the growth condition fails at the last step; the catalogue leaves such sums "
              "undecided");
    const auto c3 = corollary3_driver(3);
    cat.claim("drivers", "kfold-3", "luroth verify corollary3 -k 3", "published",
              "certified_congruent", outcome_str(c3));
    const auto t4 = theorem4_driver(2);
    cat.claim("drivers", "mixed-k2", "luroth verify theorem4 -k 2", "derived",
              "certified_congruent", outcome_str(t4));
    const auto opt = optimality_check(3);
    cat.claim("drivers", "optimality-3", "luroth verify optimality -k 3", "derived",
              "certified_noncongruent 4/5", outcome_str(opt) + " " +
                  (Rat(2) * periodic_digit_value(3)).str());
    const auto mid = hall_check(middle_thirds_fixture(2), middle_thirds_fixture(2));
    cat.claim("drivers", "middle-thirds-sum", "luroth verify theorem1", "published", "[0, 2]",
              mid.certified() ? mid.interval->str() : "not certified");
  }

  // ---- lemmas ----
  if (cat.wants("lemmas")) {
    const auto sweep = lemma_sweep(2, 20, 40);
    cat.claim("lemmas", "sign-sweep", "luroth verify lemmas", "derived", "clean",
              sweep.clean() ? "clean"
                            : std::to_string(sweep.counterexamples.size()) + " counterexamples",
              std::to_string(sweep.conditions_checked) + " conditions over " +
                  std::to_string(sweep.pairs_checked) + " digit-bound pairs");
    const auto ord = verify_ordered(3, 26);
    cat.claim("lemmas", "ordered-3-26", "luroth verify lemmas", "derived", "ordered",
              ord.ordered ? "ordered" : "counterexample");
  }

  // ---- dimension ----
  if (cat.wants("dimension")) {
    const auto d3 = moran_solve(DigitSet::band(2, 3), 1e-9);
    {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", d3.value);
      cat.claim("dimension", "dim-le3", "luroth dim 2..3", "published", "0.600967",
                std::string(buf, 8));
    }
    const auto sd = sumset_dim(DigitSet::band(2, 3), DigitSet::band(2, 3), 1e-9);
    cat.claim("dimension", "sumdim-le3", "luroth dim 2..3", "published", "1",
              sd.value >= 1.0 ? "1" : "below 1");
    const double targets[] = {0.8209, 0.7740, 0.7500, 0.7347, 0.7239, 0.7157};
    bool beaten = true;
    for (long k = 3; k <= 8; ++k)
      beaten = beaten && ray_bound_certificate(k, targets[k - 3], 1L << 27).holds;
    cat.claim("dimension", "ray-bounds-3-8", "luroth verify dims", "published",
              "all published ray bounds beaten", beaten ? "all published ray bounds beaten"
                                                        : "some bound missed",
              "certified on the doubling ladder by the decreasing sum evaluated at each bound");
    const auto b5 = dim_band_k_3k(5, 1e-9);
    cat.claim("dimension", "band-5-15", "luroth dim 5..15", "derived",
              "s=1 sum 11/60, dim > 1/2",
              "s=1 sum " + b5.sum_at_1.str() + ", dim " +
                  std::string(b5.dim.value > 0.5 ? "> 1/2" : "<= 1/2"));
    {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.5f", good_bound(16));
      cat.claim("dimension", "ray-floor-16", "luroth verify dims", "derived", "0.68034",
                std::string(buf, 7));
    }
    const auto gb = good_bound_consistency(20, 1 << 20);
    cat.claim("dimension", "ray-floor-beaten-20", "luroth verify dims", "derived", "holds",
              gb.holds ? "holds" : "fails");
  }

  return cat.suite;
}

nlohmann::json to_json(const VerificationSuite& suite) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : suite.entries) {
    nlohmann::json row{{"claim_id", e.claim_id}, {"section", e.section},
                       {"command", e.command},  {"expected", e.expected},
                       {"actual", e.actual},    {"provenance", e.provenance}};
    switch (e.status) {
      case SuiteEntry::Status::match: row["status"] = "match"; break;
      case SuiteEntry::Status::mismatch: row["status"] = "mismatch"; break;
      case SuiteEntry::Status::flagged_discrepancy: row["status"] = "flagged_discrepancy"; break;
    }
    if (!e.note.empty()) row["note"] = e.note;
    entries.push_back(std::move(row));
  }
  return nlohmann::json{{"entries", entries},
                        {"counts",
                         {{"match", suite.matches},
                          {"mismatch", suite.mismatches},
                          {"flagged_discrepancy", suite.flagged}}},
                        {"pass", suite.pass()}};
}

std::string format_suite(const VerificationSuite& suite) {
  std::ostringstream os;
  for (const auto& e : suite.entries) {
    const char* tag = e.status == SuiteEntry::Status::match ? "ok     "
                      : e.status == SuiteEntry::Status::mismatch ? "FAIL   "
                                                                 : "flagged";
    os << tag << "  " << e.section << "/" << e.claim_id;
    if (e.status == SuiteEntry::Status::match) {
      os << " = " << e.actual << "\n";
    } else {
      os << "\n         expected: " << e.expected << "\n         actual:   " << e.actual << "\n";
      if (!e.note.empty()) os << "         note: " << e.note << "\n";
    }
  }
  os << "totals: " << suite.matches << " match, " << suite.flagged << " flagged, "
     << suite.mismatches << " mismatch\n";
  return os.str();
}

}  // namespace luroth
