#pragma once

#include <string>
#include <vector>

#include "stripes/functional.hpp"
#include "stripes/params.hpp"
#include "stripes/stripe1d.hpp"
#include "stripes/verify.hpp"

namespace stripes {

std::string to_json(const EnergyReport& r, const ModelParams& m);
std::string to_json(const std::vector<CheckOutcome>& checks);
std::string to_json(const PatternComparison& c);

// CSV counterparts; all doubles printed with 17 significant digits
std::string to_csv(const EnergyReport& r);
std::string to_csv(const std::vector<CheckOutcome>& checks);
std::string to_csv(const PatternComparison& c);

std::string fmt17(double x);

}  // namespace stripes
