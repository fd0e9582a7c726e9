#pragma once

#include <json.hpp>

#include "gamma_ideal/ideal.hpp"
#include "gamma_ideal/numeric.hpp"
#include "gamma_ideal/shift_system.hpp"

namespace gamma_ideal {

// Object keys are sorted (nlohmann::json default), so dumps are canonical.

nlohmann::json to_json(const ShiftSystem& sys);
nlohmann::json to_json(const Relation& relation);
nlohmann::json to_json(const Certificate& certificate);
nlohmann::json to_json(const Verdict& verdict);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const SelfTestReport& report);
nlohmann::json complex_to_json(Complex z);

}  // namespace gamma_ideal
