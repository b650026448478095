#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "stripes/lattice_weights.hpp"
#include "stripes/params.hpp"
#include "stripes/setgeom.hpp"

namespace stripes {

struct DirectionTerms {
  double r_sum = 0.0;
  double v_sum = 0.0;
  double w_sum = 0.0;
};

struct EnergyReport {
  std::string method;  // "direct" or "decomposed"
  double total = 0.0;
  double perimeter_term = 0.0;      // Per_1(E) over one period cell
  double kernel_moment_term = 0.0;  // m1 * Per_1(E)
  double nonlocal_term = 0.0;       // int K_tau(zeta) g_E(zeta) dzeta
  std::vector<DirectionTerms> per_direction;
  double error_bound = 0.0;
  double discretization_band = 0.0;  // O(1/n) band when the raster is not exact
  int grid_n = 0;
  bool raster_exact = true;
  bool coarse_grid_warning = false;
  bool is_equality_candidate = false;
};

EnergyReport direct_energy(const PeriodicSet& E, const ModelParams& m, const QuadratureSpec& quad = {});

// Penalization of the boundary point s of a periodic 1d profile.
double r_tau_1d(const SliceProfile& profile, double s, const ModelParams& m, const QuadratureSpec& quad = {});

struct BoundaryTerms {
  double s = 0.0;
  double r = 0.0;
  double v = 0.0;  // per unit of transverse measure
};

struct LocalEnergy {
  std::vector<double> per_direction;
  double total = 0.0;
};

// Slicing decomposition of a set, evaluated once on its grid and queried for
// totals, per-slice terms and cube-localized energies. Box sets are
// rasterized at quad.grid_n.
class Decomposition {
 public:
  Decomposition(const PeriodicSet& E, const ModelParams& m, const QuadratureSpec& quad = {});

  const PeriodicSet& grid() const { return grid_; }
  int n() const { return grid_.grid_n(); }
  double cell() const { return grid_.cell_size(); }
  bool raster_exact() const { return raster_exact_; }

  // boundary terms of the row along axis i through the cell row containing tperp
  std::vector<BoundaryTerms> row_terms(int i, std::span<const double> tperp) const;
  // integral of w_i over each grid cell
  const std::vector<double>& w_cells(int i) const { return w_cell_[i]; }

  EnergyReport report() const;
  LocalEnergy local(std::span<const double> z, double l) const;

 private:
  ModelParams m_;
  QuadratureSpec quad_;
  PeriodicSet grid_;
  bool raster_exact_ = true;
  // per direction, per cell: r and v of a boundary lying on the lower face of
  // the cell along that axis (zero if none), per unit transverse measure
  std::vector<std::vector<double>> r_cell_, v_cell_, w_cell_;
  std::vector<std::vector<std::uint8_t>> has_boundary_;
  std::vector<DirectionTerms> sums_;
};

EnergyReport decomposed_energy(const PeriodicSet& E, const ModelParams& m, const QuadratureSpec& quad = {});

LocalEnergy local_energy(const PeriodicSet& E, std::span<const double> z, double l, const ModelParams& m,
                         const QuadratureSpec& quad = {});

// Terms along one slice: (s, r, v) at each boundary point.
std::vector<BoundaryTerms> rvw_terms(const PeriodicSet& E, int i, std::span<const double> tperp,
                                     const ModelParams& m, const QuadratureSpec& quad = {});

// Grid used for the nonlocal terms, and whether it represents E exactly.
PeriodicSet grid_of(const PeriodicSet& E, int n, bool* exact);

bool is_stripe_union(const PeriodicSet& E);

}  // namespace stripes
