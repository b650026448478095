#pragma once

#include <iosfwd>
#include <string>

#include "stripes/setgeom.hpp"

namespace stripes {

// Text format: header "dim L boxes" followed by one row per box
// "x1lo x1hi x2lo x2hi ...", or header "dim L grid n" followed by
// run-length tokens "count*bit" over the cells in flat order (x1 fastest).
void write_set(std::ostream& os, const PeriodicSet& E);
PeriodicSet read_set(std::istream& is);

void save_set(const std::string& path, const PeriodicSet& E);
PeriodicSet load_set(const std::string& path);

}  // namespace stripes
