#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "stripes/params.hpp"

namespace stripes {

struct SliceProfile {
  double period = 0.0;
  std::vector<double> boundaries;  // sorted, in [0, period)
  bool starts_inside = false;      // value just after boundaries[0]

  bool inside_at(double x) const;
};

// Half-open box [lo, hi) interpreted mod L; lo in [0, L), 0 < hi - lo <= L.
struct Box {
  std::vector<double> lo, hi;
};

class PeriodicSet {
 public:
  static PeriodicSet from_boxes(int d, double L, std::vector<Box> boxes);
  // cells[idx], idx = sum_j c_j n^j (axis 0 varies fastest)
  static PeriodicSet from_grid(int d, double L, int n, std::vector<std::uint8_t> cells);

  int dim() const { return d_; }
  double period() const { return L_; }
  bool is_grid() const { return n_ > 0; }

  const std::vector<Box>& boxes() const { return boxes_; }
  int grid_n() const { return n_; }
  double cell_size() const { return L_ / n_; }
  const std::vector<std::uint8_t>& cells() const { return cells_; }

  bool contains(std::span<const double> x) const;
  double volume() const;

 private:
  int d_ = 1;
  double L_ = 1.0;
  std::vector<Box> boxes_;
  int n_ = 0;
  std::vector<std::uint8_t> cells_;
};

PeriodicSet make_stripes(int direction, double h, double phase, double L, int d);

SliceProfile slice(const PeriodicSet& E, int i, std::span<const double> xperp);

double per1i(const PeriodicSet& E, int i);
double per1(const PeriodicSet& E);

std::pair<double, double> neighbors(const SliceProfile& profile, double s);

PeriodicSet complement(const PeriodicSet& E);
PeriodicSet rasterize(const PeriodicSet& E, int n);
PeriodicSet translate(const PeriodicSet& E, std::span<const double> shift);
PeriodicSet permute_axes(const PeriodicSet& E, std::span<const int> perm);

// helpers for flattened periodic lattices of side n
long ipow(long n, int d);
long lattice_index(std::span<const int> c, int n);
void lattice_coords(long idx, int n, std::span<int> c);

double wrap(double x, double L);

}  // namespace stripes
