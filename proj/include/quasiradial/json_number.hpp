#pragma once

#include "quasiradial/rational.hpp"

#include <json.hpp>

namespace quasiradial {

/// JSON integer, decimal or string such as "1/2" as an exact rational.
/// Binary doubles are read through their shortest decimal spelling, so 0.1
/// becomes 1/10.
Rational json_rational(const nlohmann::json& j);

inline double json_double(const nlohmann::json& j) { return to_double(json_rational(j)); }

}  // namespace quasiradial
