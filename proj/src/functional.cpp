#include "stripes/functional.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "stripes/kernel.hpp"
#include "stripes/kernels/autocorr.hpp"
#include "stripes/kernels/cross_terms.hpp"
#include "stripes/special.hpp"
#include "stripes/stripe1d.hpp"

namespace stripes {

namespace {

void require_tau(const ModelParams& m) {
  m.validate();
  if (!(m.tau > 0.0)) throw Error("the regularized functional needs tau > 0");
}

bool on_lattice(double x, double a) {
  const double k = x / a;
  return std::abs(k - std::round(k)) <= 1e-9 * std::max(1.0, std::abs(k));
}

struct PeriodicPhi {
  double pre, t, q, L;
  // sum_{k>=0} Phi(x + kL), Phi'' = khat_tau on (0, inf); a constant is
  // dropped when q = 3 (callers only use zero-sum combinations)
  double operator()(double x) const { return pre * hurwitz_zeta(q - 2.0, (x + t) / L); }
};

PeriodicPhi make_phi(const ModelParams& m, double L) {
  const KernelConstants k = kernel_constants(m);
  return {k.c1 * k.c2 * std::pow(L, 2.0 - m.q()), m.t(), m.q(), L};
}

// Kernel mass seen from the run to the left of a boundary at offset 0:
// off[] are the boundary offsets going right, off[0] = 0, all < L.
double one_side(const PeriodicPhi& P, const std::vector<double>& off, double L) {
  const size_t B = off.size();
  const double back = L - off[B - 1];  // distance s - s^-
  double acc = 0.0;
  for (size_t j = 0; j + 1 < B; j += 2) {
    const double al = off[j], be = off[j + 1];
    acc += (P(be + back) - P(be)) - (P(al + back) - P(al));
  }
  return acc;
}

double r_from_offsets(const PeriodicPhi& P, double m1, std::vector<double> off, double L) {
  const double right = one_side(P, off, L);
  const size_t B = off.size();
  std::vector<double> mir(B);
  mir[0] = 0.0;
  for (size_t k = 1; k < B; ++k) mir[k] = L - off[B - k];
  const double left = one_side(P, mir, L);
  return -1.0 + m1 - right - left;
}

struct Span1 {
  int k;
  double w;
};

// cells [k a, (k+1) a) overlapping [lo, hi), with overlap lengths; k mod n
std::vector<Span1> cell_overlaps(double lo, double hi, double a, int n) {
  std::vector<Span1> out;
  const long k0 = static_cast<long>(std::floor(lo / a));
  const long k1 = static_cast<long>(std::ceil(hi / a));
  for (long k = k0; k < k1; ++k) {
    const double w = std::min((k + 1) * a, hi) - std::max(k * a, lo);
    if (w > 1e-14 * a) out.push_back({static_cast<int>(((k % n) + n) % n), w});
  }
  return out;
}

// lattice nodes k a in [lo, hi)
std::vector<Span1> node_hits(double lo, double hi, double a, int n) {
  std::vector<Span1> out;
  const long k0 = static_cast<long>(std::ceil(lo / a - 1e-9));
  const long k1 = static_cast<long>(std::ceil(hi / a - 1e-9));
  for (long k = k0; k < k1; ++k) out.push_back({static_cast<int>(((k % n) + n) % n), 1.0});
  return out;
}

template <class F>
void product_sum(const std::vector<std::vector<Span1>>& lists, F&& f) {
  const int d = static_cast<int>(lists.size());
  for (const auto& l : lists)
    if (l.empty()) return;
  std::vector<size_t> pos(d, 0);
  std::vector<int> c(d);
  while (true) {
    double w = 1.0;
    for (int j = 0; j < d; ++j) {
      c[j] = lists[j][pos[j]].k;
      w *= lists[j][pos[j]].w;
    }
    f(c, w);
    int j = 0;
    for (; j < d; ++j) {
      if (++pos[j] < lists[j].size()) break;
      pos[j] = 0;
    }
    if (j == d) return;
  }
}

}  // namespace

PeriodicSet grid_of(const PeriodicSet& E, int n, bool* exact) {
  if (E.is_grid()) {
    if (exact) *exact = true;
    return E;
  }
  if (n < 4) throw Error("raster resolution must be >= 4");
  const double a = E.period() / n;
  bool ok = true;
  for (const auto& b : E.boxes())
    for (int j = 0; j < E.dim(); ++j) ok = ok && on_lattice(b.lo[j], a) && on_lattice(b.hi[j], a);
  if (exact) *exact = ok;
  return rasterize(E, n);
}

bool is_stripe_union(const PeriodicSet& E) {
  const PeriodicSet G = E.is_grid() ? E : rasterize(E, 64);
  const int d = G.dim(), n = G.grid_n();
  const auto& b = G.cells();
  const long N = ipow(n, d);
  for (int i = 0; i < d; ++i) {
    bool ok = true;
    for (int j = 0; j < d && ok; ++j) {
      if (j == i) continue;
      const long stride = ipow(n, j);
      std::vector<int> c(d);
      for (long idx = 0; idx < N && ok; ++idx) {
        lattice_coords(idx, n, c);
        const long nb = c[j] == n - 1 ? idx - stride * (n - 1) : idx + stride;
        ok = b[idx] == b[nb];
      }
    }
    if (ok) return true;
  }
  return false;
}

EnergyReport direct_energy(const PeriodicSet& E, const ModelParams& m, const QuadratureSpec& quad) {
  require_tau(m);
  if (E.dim() != m.d) throw Error("set dimension differs from model dimension");
  EnergyReport rep;
  rep.method = "direct";
  bool exact = true;
  const PeriodicSet G = grid_of(E, quad.grid_n, &exact);
  const int d = G.dim(), n = G.grid_n();
  const double L = G.period(), a = G.cell_size();
  const double Ld = std::pow(L, d);
  rep.grid_n = n;
  rep.raster_exact = exact;

  const auto W = lattice_weights(m, L, n, quad);
  const auto A = kernels::autocorrelation_fft(G.cells(), n, d);
  const auto cnt = static_cast<std::int64_t>(std::count(G.cells().begin(), G.cells().end(), std::uint8_t{1}));
  const double ad = std::pow(a, d);
  double nonlocal = 0.0;
  for (size_t k = 0; k < A.size(); ++k) nonlocal += 2.0 * ad * static_cast<double>(cnt - A[k]) * W->w[k];

  const KernelConstants kc = kernel_constants(m);
  rep.perimeter_term = per1(E);
  rep.kernel_moment_term = kc.m1 * rep.perimeter_term;
  rep.nonlocal_term = nonlocal;
  rep.total = (rep.kernel_moment_term - rep.perimeter_term - nonlocal) / Ld;
  rep.error_bound = (2.0 * ad * cnt * W->error_bound +
                     64.0 * std::numeric_limits<double>::epsilon() * (std::abs(rep.kernel_moment_term) + std::abs(nonlocal))) /
                    Ld;
  if (!exact) rep.discretization_band = 2.0 * rep.perimeter_term * std::max(1.0, std::abs(kc.m1 - 1.0)) / (n * Ld);
  try {
    const double hs = h_star(m).h;
    rep.coarse_grid_warning = n < 4.0 * L / hs;
  } catch (const Error&) {
  }
  rep.is_equality_candidate = is_stripe_union(G);
  return rep;
}

double r_tau_1d(const SliceProfile& profile, double s, const ModelParams& m, const QuadratureSpec&) {
  require_tau(m);
  const auto& b = profile.boundaries;
  if (b.size() < 2) throw Error("r_tau_1d: profile needs at least two boundary points");
  neighbors(profile, s);  // validates s
  const double L = profile.period;
  const size_t k0 = std::lower_bound(b.begin(), b.end(), s - 1e-12 * L) - b.begin();
  std::vector<double> off(b.size());
  for (size_t j = 0; j < b.size(); ++j) {
    double o = b[(k0 + j) % b.size()] - b[k0];
    if (o < 0.0) o += L;
    off[j] = o;
  }
  off[0] = 0.0;
  return r_from_offsets(make_phi(m, L), kernel_constants(m).m1, off, L);
}

Decomposition::Decomposition(const PeriodicSet& E, const ModelParams& m, const QuadratureSpec& quad)
    : m_(m), quad_(quad), grid_(grid_of(E, quad.grid_n, &raster_exact_)) {
  require_tau(m);
  if (E.dim() != m.d) throw Error("set dimension differs from model dimension");
  const int d = grid_.dim(), n = grid_.grid_n();
  const double L = grid_.period(), a = grid_.cell_size();
  const long N = ipow(n, d);
  const long rows = N / n;
  const auto W = lattice_weights(m, L, n, quad);
  const PeriodicPhi P = make_phi(m, L);
  const double m1 = kernel_constants(m).m1;
  const auto& bits = grid_.cells();
  r_cell_.assign(d, std::vector<double>(N, 0.0));
  v_cell_.assign(d, std::vector<double>(N, 0.0));
  w_cell_.assign(d, std::vector<double>(N, 0.0));
  has_boundary_.assign(d, std::vector<std::uint8_t>(N, 0));
  sums_.assign(d, {});
  for (int i = 0; i < d; ++i) {
    const auto C = kernels::cross_cell_sums(bits, W->w, n, d, i, kernels::Backend::parallel);
    const double ad = std::pow(a, d);
    for (long c = 0; c < N; ++c) w_cell_[i][c] = ad * C[c] / d;
    std::vector<int> perp;
    for (int j = 0; j < d; ++j)
      if (j != i) perp.push_back(j);
    auto& rc = r_cell_[i];
    auto& vc = v_cell_[i];
    auto& hb = has_boundary_[i];
#pragma omp parallel for schedule(dynamic, 1)
    for (long row = 0; row < rows; ++row) {
      std::vector<int> pc(std::max(d - 1, 1)), c(d);
      lattice_coords(row, n, std::span<int>(pc.data(), d - 1));
      for (int k = 0; k < d - 1; ++k) c[perp[k]] = pc[k];
      std::vector<long> idx(n);
      for (int k = 0; k < n; ++k) {
        c[i] = k;
        idx[k] = lattice_index(c, n);
      }
      std::vector<int> bk;
      for (int k = 0; k < n; ++k)
        if (bits[idx[k]] != bits[idx[(k + n - 1) % n]]) bk.push_back(k);
      const size_t B = bk.size();
      if (B < 2) continue;
      std::vector<double> off(B);
      for (size_t j = 0; j < B; ++j) {
        for (size_t q = 0; q < B; ++q) {
          int o = bk[(j + q) % B] - bk[j];
          if (o < 0) o += n;
          off[q] = o * a;
        }
        const double r = r_from_offsets(P, m1, off, L);
        // cells strictly between the neighbouring boundary points
        const int kl = bk[(j + B - 1) % B], kr = bk[(j + 1) % B];
        int len = kr - kl;
        if (len <= 0) len += n;
        double cs = 0.0;
        for (int q = 0; q < len; ++q) cs += C[idx[(kl + q) % n]];
        rc[idx[bk[j]]] = r;
        vc[idx[bk[j]]] = a * cs / (2.0 * d);
        hb[idx[bk[j]]] = 1;
      }
    }
    const double ap = std::pow(a, d - 1);
    for (long c = 0; c < N; ++c) {
      sums_[i].r_sum += ap * rc[c];
      sums_[i].v_sum += ap * vc[c];
      sums_[i].w_sum += w_cell_[i][c];
    }
  }
}

std::vector<BoundaryTerms> Decomposition::row_terms(int i, std::span<const double> tperp) const {
  const int d = grid_.dim(), n = grid_.grid_n();
  if (i < 0 || i >= d) throw Error("axis out of range");
  if (static_cast<int>(tperp.size()) != d - 1) throw Error("transverse point has wrong dimension");
  std::vector<int> c(d);
  for (int j = 0, k = 0; j < d; ++j)
    if (j != i) c[j] = std::min(n - 1, static_cast<int>(wrap(tperp[k++], grid_.period()) / cell()));
  std::vector<BoundaryTerms> out;
  for (int k = 0; k < n; ++k) {
    c[i] = k;
    const long idx = lattice_index(c, n);
    if (has_boundary_[i][idx]) out.push_back({k * cell(), r_cell_[i][idx], v_cell_[i][idx]});
  }
  return out;
}

EnergyReport Decomposition::report() const {
  EnergyReport rep;
  rep.method = "decomposed";
  const int d = grid_.dim();
  const double Ld = std::pow(grid_.period(), d);
  rep.grid_n = grid_.grid_n();
  rep.raster_exact = raster_exact_;
  rep.per_direction = sums_;
  double s = 0.0;
  for (const auto& t : sums_) s += t.r_sum + t.v_sum + t.w_sum;
  rep.total = s / Ld;
  rep.perimeter_term = per1(grid_);
  rep.kernel_moment_term = kernel_constants(m_).m1 * rep.perimeter_term;
  rep.nonlocal_term = rep.kernel_moment_term - rep.perimeter_term - s;
  const auto W = lattice_weights(m_, grid_.period(), grid_.grid_n(), quad_);
  rep.error_bound = (2.0 * std::pow(grid_.period(), d) * W->error_bound +
                     256.0 * std::numeric_limits<double>::epsilon() * std::abs(rep.kernel_moment_term)) /
                    Ld;
  rep.is_equality_candidate = is_stripe_union(grid_);
  return rep;
}

LocalEnergy Decomposition::local(std::span<const double> z, double l) const {
  const int d = grid_.dim(), n = grid_.grid_n();
  const double L = grid_.period(), a = cell();
  if (!(l > 0.0) || !(l < L)) throw Error("local energy needs 0 < l < L");
  if (static_cast<int>(z.size()) != d) throw Error("cube centre has wrong dimension");
  std::vector<std::vector<Span1>> cells(d), nodes(d), frac(d);
  for (int j = 0; j < d; ++j) {
    cells[j] = cell_overlaps(z[j] - 0.5 * l, z[j] + 0.5 * l, a, n);
    nodes[j] = node_hits(z[j] - 0.5 * l, z[j] + 0.5 * l, a, n);
    frac[j] = cells[j];
    for (auto& s : frac[j]) s.w /= a;
  }
  LocalEnergy out;
  out.per_direction.assign(d, 0.0);
  const double ld = std::pow(l, d);
  for (int i = 0; i < d; ++i) {
    double acc = 0.0;
    auto lists = cells;
    lists[i] = nodes[i];
    const auto& rc = r_cell_[i];
    const auto& vc = v_cell_[i];
    product_sum(lists, [&](const std::vector<int>& c, double w) {
      const long idx = lattice_index(c, n);
      acc += w * (rc[idx] + vc[idx]);
    });
    const auto& wc = w_cell_[i];
    product_sum(frac, [&](const std::vector<int>& c, double w) { acc += w * wc[lattice_index(c, n)]; });
    out.per_direction[i] = acc / ld;
    out.total += out.per_direction[i];
  }
  return out;
}

EnergyReport decomposed_energy(const PeriodicSet& E, const ModelParams& m, const QuadratureSpec& quad) {
  return Decomposition(E, m, quad).report();
}

LocalEnergy local_energy(const PeriodicSet& E, std::span<const double> z, double l, const ModelParams& m,
                         const QuadratureSpec& quad) {
  return Decomposition(E, m, quad).local(z, l);
}

std::vector<BoundaryTerms> rvw_terms(const PeriodicSet& E, int i, std::span<const double> tperp,
                                     const ModelParams& m, const QuadratureSpec& quad) {
  return Decomposition(E, m, quad).row_terms(i, tperp);
}

}  // namespace stripes
