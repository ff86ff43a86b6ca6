#pragma once

#include <json.hpp>

#include "luroth/covers.hpp"
#include "luroth/criteria.hpp"
#include "luroth/dimension.hpp"
#include "luroth/words.hpp"

namespace luroth {

/// Fractions cross every serialisation boundary as "p/q" strings so no
/// exactness is lost.
nlohmann::json to_json(const Rat& r);
nlohmann::json to_json(const LurothWord& w);
nlohmann::json to_json(const Interval& iv);
nlohmann::json to_json(const IntervalUnion& u);
nlohmann::json to_json(const CircleGaps& gaps);
nlohmann::json to_json(const GapCertificate& cert);
nlohmann::json to_json(const MemberCertificate& cert);
nlohmann::json to_json(const CheckReport& rep);
nlohmann::json to_json(const DriverReport& rep);
nlohmann::json to_json(const QuantityReport& rep);
nlohmann::json to_json(const DimensionResult& res);
nlohmann::json to_json(const LemmaSweepReport& rep);
nlohmann::json to_json(const OrderedReport& rep);

/// Parses {"preperiod":[...],"period":[...]} and canonicalises.
LurothWord word_from_json(const nlohmann::json& j);

/// Stable dump: two-space indent, keys in insertion order.
std::string pretty(const nlohmann::json& j);

}  // namespace luroth
