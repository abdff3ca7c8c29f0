#pragma once

#include <string>

#include "json.hpp"

#include "eisw/eisenstein.hpp"
#include "eisw/homology.hpp"

namespace eisw {

nlohmann::json p1_to_json(long N);
nlohmann::json cusps_to_json(long N);
nlohmann::json divisor_to_json(long N, long m);
nlohmann::json period_to_json(long N, long m, const Mat22& gamma);
// the /6-normalized element; "scale": 6 records the even-element factor
nlohmann::json element_to_json(long N, long m);
nlohmann::json winding_to_json(long N);
nlohmann::json report_to_json(const VerifyReport& report);

std::string dump_deterministic(const nlohmann::json& j);

}  // namespace eisw
