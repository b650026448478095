#include "stripes/setgeom.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace stripes {

double wrap(double x, double L) {
  double r = std::fmod(x, L);
  if (r < 0.0) r += L;
  if (r >= L) r = 0.0;
  return r;
}

long ipow(long n, int d) {
  long r = 1;
  for (int j = 0; j < d; ++j) r *= n;
  return r;
}

long lattice_index(std::span<const int> c, int n) {
  long idx = 0;
  for (int j = static_cast<int>(c.size()) - 1; j >= 0; --j) idx = idx * n + (((c[j] % n) + n) % n);
  return idx;
}

void lattice_coords(long idx, int n, std::span<int> c) {
  for (auto& v : c) {
    v = static_cast<int>(idx % n);
    idx /= n;
  }
}

bool SliceProfile::inside_at(double x) const {
  if (boundaries.empty()) return starts_inside;
  x = wrap(x, period);
  auto it = std::upper_bound(boundaries.begin(), boundaries.end(), x);
  const long k = (it - boundaries.begin()) - 1;  // last boundary <= x, -1 means before first
  const long steps = k < 0 ? static_cast<long>(boundaries.size()) - 1 : k;
  return (steps % 2 == 0) == starts_inside;
}

namespace {

// length of [a, a+wa) ∩ [b, b+wb) on the circle of length L
double circle_overlap(double a, double wa, double b, double wb, double L) {
  double tot = 0.0;
  for (int k = -1; k <= 1; ++k) {
    const double lo = std::max(a, b + k * L);
    const double hi = std::min(a + wa, b + wb + k * L);
    if (hi > lo) tot += hi - lo;
  }
  return tot;
}

bool in_box(const Box& b, std::span<const double> x, double L, int skip = -1) {
  for (size_t j = 0; j < x.size(); ++j) {
    if (static_cast<int>(j) == skip) continue;
    if (!(wrap(x[j] - b.lo[j], L) < b.hi[j] - b.lo[j])) return false;
  }
  return true;
}

// sorted distinct face coordinates of the boxes along axis j, always including 0
std::vector<double> face_breaks(const std::vector<Box>& boxes, int j, double L) {
  std::vector<double> v{0.0};
  for (const auto& b : boxes) {
    v.push_back(wrap(b.lo[j], L));
    v.push_back(wrap(b.hi[j], L));
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

PeriodicSet PeriodicSet::from_boxes(int d, double L, std::vector<Box> boxes) {
  if (d < 1) throw Error("set dimension must be >= 1");
  if (!(L > 0.0)) throw Error("period must be positive");
  for (auto& b : boxes) {
    if (static_cast<int>(b.lo.size()) != d || static_cast<int>(b.hi.size()) != d)
      throw Error("box corner has wrong dimension");
    for (int j = 0; j < d; ++j) {
      const double w = b.hi[j] - b.lo[j];
      if (!(w > 0.0) || w > L * (1.0 + 1e-14)) throw Error("box width must lie in (0, L]");
      if (b.lo[j] < 0.0 || b.lo[j] >= L) {
        const double k = std::floor(b.lo[j] / L);
        b.lo[j] = wrap(b.lo[j], L);
        b.hi[j] -= k * L;
      }
      if (w > L) b.hi[j] = b.lo[j] + L;
    }
  }
  for (size_t a = 0; a < boxes.size(); ++a)
    for (size_t b = a + 1; b < boxes.size(); ++b) {
      double vol = 1.0;
      for (int j = 0; j < d && vol > 0.0; ++j)
        vol *= circle_overlap(boxes[a].lo[j], boxes[a].hi[j] - boxes[a].lo[j], boxes[b].lo[j],
                              boxes[b].hi[j] - boxes[b].lo[j], L);
      if (vol > 1e-12 * std::pow(L, d)) throw Error("boxes overlap after reduction mod L");
    }
  PeriodicSet s;
  s.d_ = d;
  s.L_ = L;
  s.boxes_ = std::move(boxes);
  return s;
}

PeriodicSet PeriodicSet::from_grid(int d, double L, int n, std::vector<std::uint8_t> cells) {
  if (d < 1) throw Error("set dimension must be >= 1");
  if (!(L > 0.0)) throw Error("period must be positive");
  if (n < 4) throw Error("grid resolution must be >= 4");
  if (static_cast<long>(cells.size()) != ipow(n, d)) throw Error("grid cell count does not match n^d");
  for (auto& c : cells) c = c ? 1 : 0;
  PeriodicSet s;
  s.d_ = d;
  s.L_ = L;
  s.n_ = n;
  s.cells_ = std::move(cells);
  return s;
}

bool PeriodicSet::contains(std::span<const double> x) const {
  if (is_grid()) {
    std::vector<int> c(d_);
    for (int j = 0; j < d_; ++j) c[j] = std::min(n_ - 1, static_cast<int>(wrap(x[j], L_) / cell_size()));
    return cells_[lattice_index(c, n_)] != 0;
  }
  for (const auto& b : boxes_)
    if (in_box(b, x, L_)) return true;
  return false;
}

double PeriodicSet::volume() const {
  if (is_grid()) {
    const long cnt = std::count(cells_.begin(), cells_.end(), std::uint8_t{1});
    return cnt * std::pow(cell_size(), d_);
  }
  double v = 0.0;
  for (const auto& b : boxes_) {
    double p = 1.0;
    for (int j = 0; j < d_; ++j) p *= b.hi[j] - b.lo[j];
    v += p;
  }
  return v;
}

PeriodicSet make_stripes(int direction, double h, double phase, double L, int d) {
  if (direction < 0 || direction >= d) throw Error("stripe direction out of range");
  if (!(h > 0.0) || !(2.0 * h <= L * (1.0 + 1e-12))) throw Error("stripes need 0 < 2h <= L");
  const double ratio = L / (2.0 * h);
  const long k = std::lround(ratio);
  if (std::abs(ratio - k) > 1e-12 * std::max(1.0, ratio)) throw Error("stripe period does not divide L");
  std::vector<Box> boxes;
  for (long j = 0; j < k; ++j) {
    Box b;
    b.lo.assign(d, 0.0);
    b.hi.assign(d, L);
    b.lo[direction] = wrap(phase + 2.0 * h * j, L);
    b.hi[direction] = b.lo[direction] + h;
    boxes.push_back(b);
  }
  return PeriodicSet::from_boxes(d, L, std::move(boxes));
}

SliceProfile slice(const PeriodicSet& E, int i, std::span<const double> xperp) {
  const int d = E.dim();
  const double L = E.period();
  if (i < 0 || i >= d) throw Error("slice axis out of range");
  if (static_cast<int>(xperp.size()) != d - 1) throw Error("slice offset has wrong dimension");
  std::vector<double> x(d, 0.0);
  for (int j = 0, k = 0; j < d; ++j)
    if (j != i) x[j] = xperp[k++];
  SliceProfile prof;
  prof.period = L;
  if (E.is_grid()) {
    const int n = E.grid_n();
    const double a = E.cell_size();
    std::vector<int> c(d);
    for (int j = 0; j < d; ++j) c[j] = std::min(n - 1, static_cast<int>(wrap(x[j], L) / a));
    std::vector<std::uint8_t> row(n);
    for (int k = 0; k < n; ++k) {
      c[i] = k;
      row[k] = E.cells()[lattice_index(c, n)];
    }
    for (int k = 0; k < n; ++k)
      if (row[k] != row[(k + n - 1) % n]) prof.boundaries.push_back(k * a);
    prof.starts_inside = prof.boundaries.empty() ? row[0] != 0 : row[static_cast<int>(std::lround(prof.boundaries[0] / a))] != 0;
    return prof;
  }
  std::vector<std::pair<double, double>> iv;  // (start, width)
  for (const auto& b : E.boxes())
    if (in_box(b, x, L, i)) iv.emplace_back(b.lo[i], b.hi[i] - b.lo[i]);
  std::vector<double> br;
  for (auto [s, w] : iv) {
    br.push_back(wrap(s, L));
    br.push_back(wrap(s + w, L));
  }
  std::sort(br.begin(), br.end());
  br.erase(std::unique(br.begin(), br.end()), br.end());
  auto covered = [&](double y) {
    for (auto [s, w] : iv)
      if (wrap(y - s, L) < w) return true;
    return false;
  };
  if (br.size() <= 1) {
    prof.starts_inside = covered(br.empty() ? 0.0 : br[0]);
    return prof;
  }
  const size_t m = br.size();
  std::vector<bool> arc(m);  // arc j runs from br[j] to br[j+1]
  for (size_t j = 0; j < m; ++j) {
    const double hi = j + 1 < m ? br[j + 1] : br[0] + L;
    arc[j] = covered(0.5 * (br[j] + hi));
  }
  for (size_t j = 0; j < m; ++j)
    if (arc[j] != arc[(j + m - 1) % m]) prof.boundaries.push_back(br[j]);
  if (prof.boundaries.empty()) {
    prof.starts_inside = arc[0];
  } else {
    const size_t j0 = std::lower_bound(br.begin(), br.end(), prof.boundaries[0]) - br.begin();
    prof.starts_inside = arc[j0];
  }
  return prof;
}

double per1i(const PeriodicSet& E, int i) {
  const int d = E.dim();
  if (i < 0 || i >= d) throw Error("axis out of range");
  if (E.is_grid()) {
    const int n = E.grid_n();
    const long N = ipow(n, d);
    const long stride = ipow(n, i);
    long faces = 0;
    std::vector<int> c(d);
    for (long idx = 0; idx < N; ++idx) {
      lattice_coords(idx, n, c);
      const long nb = c[i] == n - 1 ? idx - stride * (n - 1) : idx + stride;
      if (E.cells()[idx] != E.cells()[nb]) ++faces;
    }
    return faces * std::pow(E.cell_size(), d - 1);
  }
  const double L = E.period();
  std::vector<std::vector<double>> brk;
  std::vector<int> axes;
  for (int j = 0; j < d; ++j)
    if (j != i) {
      axes.push_back(j);
      brk.push_back(face_breaks(E.boxes(), j, L));
    }
  double total = 0.0;
  std::vector<size_t> pos(axes.size(), 0);
  std::vector<double> xp(axes.size());
  while (true) {
    double meas = 1.0;
    for (size_t k = 0; k < axes.size(); ++k) {
      const auto& b = brk[k];
      const double lo = b[pos[k]], hi = pos[k] + 1 < b.size() ? b[pos[k] + 1] : L;
      meas *= hi - lo;
      xp[k] = 0.5 * (lo + hi);
    }
    total += meas * slice(E, i, xp).boundaries.size();
    size_t k = 0;
    for (; k < axes.size(); ++k) {
      if (++pos[k] < brk[k].size()) break;
      pos[k] = 0;
    }
    if (k == axes.size()) break;
  }
  return total;
}

double per1(const PeriodicSet& E) {
  double s = 0.0;
  for (int i = 0; i < E.dim(); ++i) s += per1i(E, i);
  return s;
}

std::pair<double, double> neighbors(const SliceProfile& profile, double s) {
  const auto& b = profile.boundaries;
  if (b.size() < 2) throw Error("neighbors: profile needs at least two boundary points");
  const double L = profile.period;
  size_t k = std::lower_bound(b.begin(), b.end(), s - 1e-12 * L) - b.begin();
  if (k == b.size() || std::abs(b[k] - s) > 1e-12 * L) throw Error("neighbors: s is not a boundary point");
  const double sm = k == 0 ? b.back() - L : b[k - 1];
  const double sp = k + 1 == b.size() ? b.front() + L : b[k + 1];
  return {sm, sp};
}

PeriodicSet complement(const PeriodicSet& E) {
  const int d = E.dim();
  const double L = E.period();
  if (E.is_grid()) {
    auto cells = E.cells();
    for (auto& c : cells) c ^= 1;
    return PeriodicSet::from_grid(d, L, E.grid_n(), std::move(cells));
  }
  std::vector<std::vector<double>> brk(d);
  for (int j = 0; j < d; ++j) brk[j] = face_breaks(E.boxes(), j, L);
  std::vector<Box> out;
  std::vector<size_t> pos(d, 0);
  std::vector<double> mid(d);
  while (true) {
    Box b;
    b.lo.resize(d);
    b.hi.resize(d);
    for (int j = 0; j < d; ++j) {
      b.lo[j] = brk[j][pos[j]];
      b.hi[j] = pos[j] + 1 < brk[j].size() ? brk[j][pos[j] + 1] : L;
      mid[j] = 0.5 * (b.lo[j] + b.hi[j]);
    }
    if (!E.contains(mid)) out.push_back(b);
    int j = 0;
    for (; j < d; ++j) {
      if (++pos[j] < brk[j].size()) break;
      pos[j] = 0;
    }
    if (j == d) break;
  }
  return PeriodicSet::from_boxes(d, L, std::move(out));
}

PeriodicSet rasterize(const PeriodicSet& E, int n) {
  const int d = E.dim();
  const double a = E.period() / n;
  const long N = ipow(n, d);
  std::vector<std::uint8_t> cells(N);
  std::vector<int> c(d);
  std::vector<double> x(d);
  for (long idx = 0; idx < N; ++idx) {
    lattice_coords(idx, n, c);
    for (int j = 0; j < d; ++j) x[j] = (c[j] + 0.5) * a;
    cells[idx] = E.contains(x) ? 1 : 0;
  }
  return PeriodicSet::from_grid(d, E.period(), n, std::move(cells));
}

PeriodicSet translate(const PeriodicSet& E, std::span<const double> shift) {
  const int d = E.dim();
  if (static_cast<int>(shift.size()) != d) throw Error("shift has wrong dimension");
  if (E.is_grid()) {
    const int n = E.grid_n();
    std::vector<int> sh(d), c(d);
    for (int j = 0; j < d; ++j) {
      const double k = shift[j] / E.cell_size();
      sh[j] = static_cast<int>(std::lround(k));
      if (std::abs(k - sh[j]) > 1e-9) throw Error("grid sets translate by whole cells only");
    }
    std::vector<std::uint8_t> cells(E.cells().size());
    for (long idx = 0; idx < static_cast<long>(cells.size()); ++idx) {
      lattice_coords(idx, n, c);
      for (int j = 0; j < d; ++j) c[j] += sh[j];
      cells[lattice_index(c, n)] = E.cells()[idx];
    }
    return PeriodicSet::from_grid(d, E.period(), n, std::move(cells));
  }
  auto boxes = E.boxes();
  for (auto& b : boxes)
    for (int j = 0; j < d; ++j) {
      b.lo[j] += shift[j];
      b.hi[j] += shift[j];
    }
  return PeriodicSet::from_boxes(d, E.period(), std::move(boxes));
}

PeriodicSet permute_axes(const PeriodicSet& E, std::span<const int> perm) {
  const int d = E.dim();
  if (static_cast<int>(perm.size()) != d) throw Error("permutation has wrong length");
  // new axis j is old axis perm[j]
  if (E.is_grid()) {
    const int n = E.grid_n();
    std::vector<int> c(d), cn(d);
    std::vector<std::uint8_t> cells(E.cells().size());
    for (long idx = 0; idx < static_cast<long>(cells.size()); ++idx) {
      lattice_coords(idx, n, c);
      for (int j = 0; j < d; ++j) cn[j] = c[perm[j]];
      cells[lattice_index(cn, n)] = E.cells()[idx];
    }
    return PeriodicSet::from_grid(d, E.period(), n, std::move(cells));
  }
  auto boxes = E.boxes();
  for (auto& b : boxes) {
    Box nb = b;
    for (int j = 0; j < d; ++j) {
      nb.lo[j] = b.lo[perm[j]];
      nb.hi[j] = b.hi[perm[j]];
    }
    b = nb;
  }
  return PeriodicSet::from_boxes(d, E.period(), std::move(boxes));
}

}  // namespace stripes
