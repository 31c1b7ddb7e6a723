#pragma once

#include "json.hpp"
#include "picard_fuchs.hpp"
#include "series.hpp"

namespace mirsym {

// Shared JSON schema: rationals as "p/q" strings ("p" when the denominator
// is 1), truncated series as arrays of such strings by ascending power, log
// series as arrays of those arrays indexed by L-power, operators as
// {"terms": [{"z_power": int, "theta_poly": [c0, c1, ...]}]}.

nlohmann::ordered_json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json log_series_to_json(const LogSeries& s);
LogSeries log_series_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json theta_operator_to_json(const ThetaOperator& op);
ThetaOperator theta_operator_from_json(const nlohmann::ordered_json& j);

}  // namespace mirsym
