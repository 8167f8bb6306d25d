#include "hh/json_io.hpp"

#include <stdexcept>

namespace hh {

using nlohmann::json;

json to_json(const Rational& x) {
    return json::array({numerator(x).str(), denominator(x).str()});
}

Rational rational_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("rational_from_json: expected [\"p\",\"q\"]");
    Integer num(j[0].get<std::string>());
    Integer den(j[1].get<std::string>());
    if (den == 0) throw std::invalid_argument("rational_from_json: zero denominator");
    return Rational(num, den);
}

json to_json(const TruncatedSeries& s) {
    json coeffs = json::array();
    for (const Rational& c : s.coeffs()) coeffs.push_back(to_json(c));
    return json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

TruncatedSeries series_from_json(const json& j) {
    const std::size_t order = j.at("order").get<std::size_t>();
    const json& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != order + 1)
        throw std::invalid_argument("series_from_json: coeffs must have order+1 entries");
    std::vector<Rational> c;
    c.reserve(order + 1);
    for (const json& e : coeffs) c.push_back(rational_from_json(e));
    return TruncatedSeries(order, std::move(c));
}

json to_json(const Partition& eta) {
    return json(eta.parts());
}

json to_json(const HurwitzValue& v) {
    return json{{"d", v.eta.size()}, {"eta", to_json(v.eta)},   {"g", v.g},
                {"r", v.r},          {"value", to_json(v.value)}, {"source", to_string(v.source)}};
}

json to_json(const IdentityReport& rep) {
    return json{{"identity", to_string(rep.identity)},
                {"d", rep.d},
                {"order", rep.order},
                {"certified_order", rep.certified_order},
                {"passed", rep.passed},
                {"residual", to_json(rep.residual)}};
}

json to_json(const HodgeIntegralValue& v) {
    return json{{"d", v.d}, {"g", v.g}, {"i", v.i}, {"value", to_json(v.value)}};
}

} // namespace hh
