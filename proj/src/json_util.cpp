#include "json_util.hpp"

#include "errors.hpp"

namespace mirsym {

using nlohmann::ordered_json;

ordered_json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const ordered_json& j) {
    if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string");
    return Rational::parse(j.get<std::string>());
}

ordered_json series_to_json(const TruncatedSeries& s) {
    ordered_json arr = ordered_json::array();
    for (int n = 0; n <= s.order(); ++n) arr.push_back(s.coeff(n).str());
    return arr;
}

TruncatedSeries series_from_json(const ordered_json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("series must be a nonempty array");
    TruncatedSeries s(static_cast<int>(j.size()) - 1);
    for (size_t n = 0; n < j.size(); ++n)
        s.set_coeff(static_cast<int>(n), rational_from_json(j[n]));
    return s;
}

ordered_json log_series_to_json(const LogSeries& s) {
    ordered_json arr = ordered_json::array();
    for (int k = 0; k <= s.log_degree(); ++k) arr.push_back(series_to_json(s.part(k)));
    return arr;
}

LogSeries log_series_from_json(const ordered_json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("log series must be a nonempty array");
    TruncatedSeries part0 = series_from_json(j[0]);
    LogSeries s(part0.order(), 0);
    s.set_part(0, part0);
    for (size_t k = 1; k < j.size(); ++k)
        s.set_part(static_cast<int>(k), series_from_json(j[k]));
    return s;
}

ordered_json theta_operator_to_json(const ThetaOperator& op) {
    ordered_json j;
    j["terms"] = ordered_json::array();
    for (const auto& t : op.terms) {
        ordered_json term;
        term["z_power"] = t.z_power;
        ordered_json poly = ordered_json::array();
        for (const auto& c : t.theta_poly) poly.push_back(c.str());
        term["theta_poly"] = poly;
        j["terms"].push_back(term);
    }
    if (op.factored_am) j["factored_am"] = true;
    return j;
}

ThetaOperator theta_operator_from_json(const ordered_json& j) {
    if (!j.contains("terms") || !j["terms"].is_array())
        throw ParseError("operator needs a 'terms' array");
    ThetaOperator op;
    for (const auto& term : j["terms"]) {
        ThetaOperator::Term t;
        t.z_power = term.at("z_power").get<int>();
        if (t.z_power < 0) throw ParseError("z_power must be nonnegative");
        for (const auto& c : term.at("theta_poly")) t.theta_poly.push_back(rational_from_json(c));
        op.terms.push_back(std::move(t));
    }
    if (j.contains("factored_am")) op.factored_am = j["factored_am"].get<bool>();
    return op;
}

}  // namespace mirsym
