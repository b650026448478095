#pragma once

#include <vector>

#include "stripes/params.hpp"

namespace stripes {

struct SeriesValue {
  double value = 0.0;
  double ds = 0.0;   // dC/ds
  double ds2 = 0.0;  // d^2C/ds^2
  int truncation_k = 0;
  double tail_bound = 0.0;
};

struct PeriodResult {
  double h = 0.0;
  double energy = 0.0;
  std::vector<double> multiplicity;
};

struct ConvexityWindow {
  double c1bar = 0.0;
  double c2bar = 0.0;
  double c3bar = 0.0;
};

SeriesValue c_series(double s, const ModelParams& m, double tol = 1e-14);

// Closed form through Hurwitz zeta differences, used as a cross-check.
double c_series_hurwitz(double s, const ModelParams& m);

double e_tau(double h, const ModelParams& m);
double de_tau(double h, const ModelParams& m);
double d2e_tau(double h, const ModelParams& m);

PeriodResult h_star(const ModelParams& m, double tol = 1e-12);
PeriodResult h_box(double L, const ModelParams& m, double tol = 1e-12);
PeriodResult h_interval(double len, const ModelParams& m, double tol = 1e-12);

ConvexityWindow convexity_window(const ModelParams& m, double eps);

}  // namespace stripes
