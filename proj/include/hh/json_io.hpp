#ifndef HH_JSON_IO_HPP
#define HH_JSON_IO_HPP

#include "hh/hurwitz.hpp"
#include "hh/identities.hpp"
#include "hh/partition.hpp"
#include "hh/rational.hpp"
#include "hh/series.hpp"

#include <json.hpp>

namespace hh {

// Rationals cross the boundary as ["p", "q"] with decimal strings, so the
// JSON forms stay bit-exact at any precision.
nlohmann::json to_json(const Rational& x);
Rational rational_from_json(const nlohmann::json& j);

// {"order": N, "coeffs": [["p","q"], ...]} with exactly N+1 entries.
nlohmann::json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Partition& eta); // [2, 1]

// {"d":..., "eta":[...], "g":..., "r":..., "value":["p","q"], "source":...}
nlohmann::json to_json(const HurwitzValue& v);

// {"identity":..., "d":..., "order":..., "certified_order":..., "passed":..., "residual":...}
nlohmann::json to_json(const IdentityReport& rep);

// {"d":..., "g":..., "i":..., "value":["p","q"]}
nlohmann::json to_json(const HodgeIntegralValue& v);

} // namespace hh

#endif
