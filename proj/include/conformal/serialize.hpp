#pragma once

#include "conformal/invariant_algebra.hpp"

#include <json.hpp>

namespace conformal {

inline constexpr const char* kSelfDualSchema = "conformal.selfdual/1";

// Rationals travel as "p/q" strings so nothing is rounded.
nlohmann::json to_json(const SelfDualPoly& p);
SelfDualPoly selfdual_from_json(const nlohmann::json& j);

Rational parse_rational(const std::string& text);

}  // namespace conformal
