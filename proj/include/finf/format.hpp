#pragma once

#include "finf/cyclotomic.hpp"
#include "finf/laurent.hpp"

#include <json.hpp>
#include <string>

namespace finf {

// Unicode superscript digits with a superscript minus, e.g. -12 -> "⁻¹²".
std::string superscript(int e);

// Highest exponent first, "−t + 3 − t⁻¹" style. Zero prints as "0".
std::string to_text(const UnivariateLaurent& p, const std::string& var);
// Grouped by s-power, highest first: "(q² − 1)s + q⁻¹".
std::string to_text(const BivariateLaurent& p);
// In zeta = exp(2 pi i / order).
std::string to_text(const CyclotomicScalar& c);
std::string to_text(const CyclotomicLaurent& p);

// [e_q, e_s, "coeff"] triples sorted by (e_q, e_s). Univariate values use the given slot.
nlohmann::ordered_json to_json(const BivariateLaurent& p);
nlohmann::ordered_json to_json(const UnivariateLaurent& p, bool in_s_slot);
// [0, e_s, {order, coeffs}] triples sorted by e_s.
nlohmann::ordered_json to_json(const CyclotomicLaurent& p);

}  // namespace finf
