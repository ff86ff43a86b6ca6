#include "luroth/json_io.hpp"

#include <cstdio>

namespace luroth {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

json to_json(const Rat& r) { return r.str(); }

json to_json(const LurothWord& w) {
  return json{{"preperiod", w.preperiod}, {"period", w.period}};
}

json to_json(const Interval& iv) { return json::array({iv.lo.str(), iv.hi.str()}); }

json to_json(const IntervalUnion& u) {
  json arr = json::array();
  for (const auto& p : u.parts()) arr.push_back(to_json(p));
  return arr;
}

json to_json(const CircleGaps& gaps) {
  json arr = json::array();
  for (const auto& g : gaps.gaps) arr.push_back(to_json(g));
  return json{{"open_intervals", arr}, {"wraps_at_zero", gaps.wraps_at_zero}};
}

json to_json(const GapCertificate& cert) {
  return json{
      {"band_a", {{"N1", cert.N1a}, {"N2", cert.N2a}, {"depth", cert.depth_a}}},
      {"band_b", {{"N1", cert.N1b}, {"N2", cert.N2b}, {"depth", cert.depth_b}}},
      {"max_parts", cert.max_parts},
      {"cover_a", to_json(cert.cover_a)},
      {"cover_b", to_json(cert.cover_b)},
      {"sum_cover", to_json(cert.sum)},
      {"mod1_cover", to_json(cert.folded.parts)},
      {"gaps", to_json(cert.gaps)},
      {"certified_noncongruence", cert.certified_noncongruence()},
  };
}

json to_json(const MemberCertificate& cert) {
  json summands = json::array();
  for (const auto& s : cert.summands) {
    json e{{"word", to_json(s.word)},
           {"alphabet", s.alphabet.str()},
           {"value", s.value.str()},
           {"digits_ok", s.digits_ok}};
    if (!s.digits_ok) e["offending_digit"] = s.offending_digit;
    summands.push_back(std::move(e));
  }
  return json{{"summands", summands},
              {"sum", cert.sum.str()},
              {"target", cert.target.str()},
              {"verified", cert.verified}};
}

json to_json(const CheckReport& rep) {
  json conds = json::array();
  for (const auto& c : rep.conditions)
    conds.push_back(json{{"name", c.name},
                         {"lhs", c.lhs.str()},
                         {"relation", c.relation},
                         {"rhs", c.rhs.str()},
                         {"holds", c.holds}});
  json verdict;
  switch (rep.verdict) {
    case CheckReport::Verdict::certified_interval:
      verdict = json{{"kind", "certified_interval"}, {"interval", to_json(*rep.interval)}};
      break;
    case CheckReport::Verdict::certified_thickness_bound:
      verdict = json{{"kind", "certified_thickness_bound"},
                     {"thickness_bound", rep.thickness_bound->str()},
                     {"dim_lower_bound", fixed(*rep.dim_lower_bound)}};
      break;
    case CheckReport::Verdict::inconclusive:
      verdict = json{{"kind", "inconclusive"}};
      break;
  }
  return json{{"criterion", criterion_name(rep.criterion)},
              {"inputs", rep.inputs},
              {"conditions", conds},
              {"verdict", verdict},
              {"notes", rep.notes},
              {"discrepancies", rep.discrepancies}};
}

json to_json(const DriverReport& rep) {
  json sub = json::array();
  for (const auto& s : rep.sub) sub.push_back(to_json(s));
  json out{{"id", rep.id}, {"checks", sub}};
  switch (rep.outcome) {
    case DriverReport::Outcome::certified_congruent: out["outcome"] = "certified_congruent"; break;
    case DriverReport::Outcome::certified_noncongruent:
      out["outcome"] = "certified_noncongruent";
      break;
    case DriverReport::Outcome::inconclusive: out["outcome"] = "inconclusive"; break;
  }
  if (rep.interval) out["interval"] = to_json(*rep.interval);
  if (rep.gap_witness) out["gap_certificate"] = to_json(*rep.gap_witness);
  if (rep.members) out["members"] = to_json(*rep.members);
  if (!rep.chosen_N.empty()) {
    out["epsilon"] = rep.epsilon.str();
    out["band_tops"] = rep.chosen_N;
  }
  out["notes"] = rep.notes;
  out["discrepancies"] = rep.discrepancies;
  return out;
}

json to_json(const QuantityReport& rep) {
  return json{{"g", rep.g.str()},       {"h", rep.h.str()},
              {"tau", rep.tau.str()},   {"gamma", rep.gamma.str()},
              {"g_at", rep.g_at},       {"h_at", rep.h_at},
              {"tau_at", rep.tau_at},   {"exact", rep.exact}};
}

json to_json(const DimensionResult& res) {
  return json{{"value", fixed(res.value)},
              {"bracket", json::array({fixed(res.lo), fixed(res.hi)})},
              {"residual", fixed(res.residual)},
              {"iterations", res.iterations},
              {"exact_sum_at_1", res.exact_sum_at_1.str()},
              {"degenerate", res.degenerate}};
}

json to_json(const LemmaSweepReport& rep) {
  return json{{"N1_range", json::array({rep.n1_lo, rep.n1_hi})},
              {"N2_max", rep.n2_hi},
              {"pairs_checked", rep.pairs_checked},
              {"conditions_checked", rep.conditions_checked},
              {"counterexamples", rep.counterexamples},
              {"notes", rep.notes},
              {"clean", rep.clean()}};
}

json to_json(const OrderedReport& rep) {
  json entries = json::array();
  for (const auto& e : rep.entries)
    entries.push_back(json{{"step", e.i},
                           {"delta_spine", e.delta_spine.str()},
                           {"delta_child", e.delta_child.str()}});
  return json{{"N1", rep.N1},
              {"N2", rep.N2},
              {"entries", entries},
              {"ordered", rep.ordered},
              {"counterexamples", rep.counterexamples}};
}

LurothWord word_from_json(const json& j) {
  std::vector<long> pre, per;
  if (j.contains("preperiod")) pre = j.at("preperiod").get<std::vector<long>>();
  per = j.at("period").get<std::vector<long>>();
  return canonical_word(std::move(pre), std::move(per));
}

std::string pretty(const json& j) { return j.dump(2) + "\n"; }

}  // namespace luroth
