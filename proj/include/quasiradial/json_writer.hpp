#pragma once

#include <json.hpp>

#include <string>

namespace quasiradial {

/// Deterministic JSON text: keys in insertion order, floating point numbers
/// with 17 significant digits, non-finite numbers as null.
std::string dump_json(const nlohmann::ordered_json& j, int indent = 2);

}  // namespace quasiradial
