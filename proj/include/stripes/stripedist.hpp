#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "stripes/kernels/backend.hpp"
#include "stripes/setgeom.hpp"

namespace stripes {

// Q_l(z) = z + [-l/2, l/2)^d, taken mod L.
struct Cube {
  std::vector<double> z;
  double l = 1.0;
};

// Optimal stripe profile inside the cube along one axis, in coordinates
// relative to the lower cube face (0 .. l).
struct FitProfile {
  double length = 0.0;
  std::vector<double> boundaries;
  bool starts_inside = false;
};

struct StripeFitResult {
  double distance = 0.0;  // volume-normalized L1 distance
  int direction = 0;
  FitProfile profile;
  double eta = 0.0;
  double discretization_bound = 0.0;  // boundary placement error from the resolution grid
};

// Measure of E inside the box [lo, hi) (mod L, each hi - lo <= L).
double measure_in_box(const PeriodicSet& E, std::span<const double> lo, std::span<const double> hi);

std::vector<double> column_occupancy(const PeriodicSet& E, const Cube& Q, int i, int resolution);

struct ProfileFit {
  double cost = 0.0;             // sum over cells of w * |a - g|
  std::vector<std::uint8_t> g;   // optimal cell values
};

// Minimize sum_k w |a_k - g_k| over binary g whose interior runs (between two
// switches) have length >= eta; first and last runs are free.
ProfileFit fit_profile_dp(std::span<const double> occupancy, double cell_width, double eta);

StripeFitResult d_eta_i(const PeriodicSet& E, const Cube& Q, int i, double eta, int resolution);
StripeFitResult d_eta(const PeriodicSet& E, const Cube& Q, double eta, int resolution);

struct ClassifyOptions {
  double l = 4.0;
  double eta = 1.0;
  double delta = 0.1;
  int resolution = 32;
  int z_points = 0;           // z-grid points per axis; 0 picks the coarsest allowed
  double rho = 0.0;           // dilation radius of the high-distance set; 0 means delta l / C_d
  double lipschitz_const = 0.0;  // C_d; 0 means d
  double dilation_minus1 = 1.0;
};

struct CubeField {
  int d = 1;
  double L = 0.0;
  int m = 0;                     // z points per axis, spacing L/m
  double rho = 0.0;
  std::vector<double> dist;      // m^d x d, D^i at each z
  std::vector<std::string> label;  // "A-1", "A0", "A<i>" (trimmed part), "B<i>" (rest of A_i)
  std::vector<int> component;    // component id of oriented points, -1 otherwise

  void write_csv(std::ostream& os) const;
};

CubeField classify_cubes(const PeriodicSet& E, const ClassifyOptions& opt,
                         kernels::Backend backend = kernels::Backend::parallel);

}  // namespace stripes
