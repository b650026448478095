#include "stripes/report_json.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <sstream>

namespace stripes {

using json = nlohmann::json;

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

// nlohmann prints the shortest round-trip form; keep that, it is exact
json num(double x) { return std::isfinite(x) ? json(x) : json(fmt17(x)); }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) {
    if (c == '"') o += '"';
    o += c;
  }
  return o + "\"";
}

}  // namespace

std::string to_json(const EnergyReport& r, const ModelParams& m) {
  json j{{"method", r.method},
         {"params", {{"d", m.d}, {"p", m.p}, {"tau", m.tau}}},
         {"total", num(r.total)},
         {"perimeter_term", num(r.perimeter_term)},
         {"kernel_moment_term", num(r.kernel_moment_term)},
         {"nonlocal_term", num(r.nonlocal_term)},
         {"error_bound", num(r.error_bound)},
         {"discretization_band", num(r.discretization_band)},
         {"grid_n", r.grid_n},
         {"raster_exact", r.raster_exact},
         {"coarse_grid_warning", r.coarse_grid_warning},
         {"is_equality_candidate", r.is_equality_candidate}};
  j["per_direction"] = json::array();
  for (const auto& t : r.per_direction)
    j["per_direction"].push_back({{"r_sum", num(t.r_sum)}, {"v_sum", num(t.v_sum)}, {"w_sum", num(t.w_sum)}});
  return j.dump(2);
}

std::string to_json(const std::vector<CheckOutcome>& checks) {
  json a = json::array();
  for (const auto& c : checks) {
    json w = c.witness.empty() ? json::object() : json::parse(c.witness);
    a.push_back({{"name", c.name}, {"passed", c.passed}, {"margin", num(c.margin)}, {"samples", c.samples},
                 {"witness", w}});
  }
  return a.dump(2);
}

std::string to_json(const PatternComparison& c) {
  json rows = json::array();
  for (const auto& r : c.rows)
    rows.push_back({{"name", r.name}, {"total", num(r.total)}, {"error_bound", num(r.error_bound)},
                    {"band", num(r.band)}});
  json j{{"rows", rows}, {"passed", c.outcome.passed}, {"margin", num(c.outcome.margin)},
         {"witness", json::parse(c.outcome.witness.empty() ? "{}" : c.outcome.witness)}};
  return j.dump(2);
}

std::string to_csv(const EnergyReport& r) {
  std::ostringstream o;
  o << "method,total,perimeter_term,kernel_moment_term,nonlocal_term,error_bound,discretization_band,grid_n,"
       "raster_exact\n";
  o << r.method << ',' << fmt17(r.total) << ',' << fmt17(r.perimeter_term) << ',' << fmt17(r.kernel_moment_term)
    << ',' << fmt17(r.nonlocal_term) << ',' << fmt17(r.error_bound) << ',' << fmt17(r.discretization_band) << ','
    << r.grid_n << ',' << (r.raster_exact ? 1 : 0) << '\n';
  return o.str();
}

std::string to_csv(const std::vector<CheckOutcome>& checks) {
  std::ostringstream o;
  o << "name,passed,margin,samples,witness\n";
  for (const auto& c : checks)
    o << c.name << ',' << (c.passed ? 1 : 0) << ',' << fmt17(c.margin) << ',' << c.samples << ','
      << csv_escape(c.witness) << '\n';
  return o.str();
}

std::string to_csv(const PatternComparison& c) {
  std::ostringstream o;
  o << "name,total,error_bound,band\n";
  for (const auto& r : c.rows)
    o << r.name << ',' << fmt17(r.total) << ',' << fmt17(r.error_bound) << ',' << fmt17(r.band) << '\n';
  return o.str();
}

}  // namespace stripes
