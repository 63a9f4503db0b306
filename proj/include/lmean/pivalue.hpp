#pragma once

#include <string>

#include "lmean/rational.hpp"

namespace lmean {

// Exact value coeff * pi^pi_power. coeff == 0 canonicalizes to pi_power == 0
// so equality is structural.
struct PiValue {
  int pi_power = 0;
  Rational coeff = 0;
};

PiValue make_pi_value(int pi_power, Rational coeff);

bool operator==(const PiValue& a, const PiValue& b);
bool operator!=(const PiValue& a, const PiValue& b);

// Addition requires equal pi_power (or either side zero).
PiValue add(const PiValue& a, const PiValue& b);

Float50 to_float50(const PiValue& v);
double to_double(const PiValue& v);

// "num/den" (den omitted when 1); parses back to the identical Rational.
std::string coeff_string(const PiValue& v);

}  // namespace lmean
