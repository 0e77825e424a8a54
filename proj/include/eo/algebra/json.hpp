#pragma once

#include <json.hpp>

#include "eo/algebra/laurent.hpp"

namespace eo::algebra {

nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const Laurent& f);
nlohmann::json to_json(const RatFunc& f);

Rational rational_from_json(const nlohmann::json& j);
Laurent laurent_from_json(const nlohmann::json& j, std::size_t arity);
RatFunc ratfunc_from_json(const nlohmann::json& j);

}  // namespace eo::algebra
