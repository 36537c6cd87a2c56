#pragma once

#include "pf/operator.hpp"

#include "json.hpp"

namespace pf {

nlohmann::json operator_to_json(const ThetaOperator& op);
ThetaOperator operator_from_json(const nlohmann::json& j);

}  // namespace pf
