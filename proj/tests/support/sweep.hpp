#pragma once

#include <string>
#include <vector>

#include "flapped/complex.hpp"

namespace flapped::support {

// Bundled spec by file stem, e.g. "b3".
PillowSpec bundled(const std::string& name);

// Fixed sample of specs with n in {2,3,4} and total multiplicity <= 3.
std::vector<PillowSpec> sweep_configs();

// Distinct n = 2 specs with at least one horizontal and one vertical flap.
std::vector<PillowSpec> certified_configs(int count);

std::string describe(const PillowSpec& spec);

}  // namespace flapped::support
