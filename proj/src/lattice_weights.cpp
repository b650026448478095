#include "stripes/lattice_weights.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "stripes/kernels/near_field.hpp"
#include "stripes/setgeom.hpp"
#include "stripes/special.hpp"

namespace stripes {

namespace {

constexpr int kMaxFarOrder = 60;

void even_multi_indices(int d, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == d - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= total; v += 2) {
    cur.push_back(v);
    even_multi_indices(d, total - v, cur, out);
    cur.pop_back();
  }
}

// mu[j][m] = int over one period of ((x - L/2)/(L/2))^j times the periodic
// 1d hat centred at m a.
std::vector<std::vector<double>> hat_moments(int n, double L, int jmax) {
  const double a = L / n, half = 0.5 * L;
  const GaussRule& g = gauss_legendre(40);
  std::vector<std::vector<double>> mu(jmax + 1, std::vector<double>(n, 0.0));
  for (int m = 0; m < n; ++m) {
    const double right = m * a;
    const double left = m == 0 ? L - a : (m - 1) * a;
    for (size_t k = 0; k < g.x.size(); ++k) {
      const double u = 0.5 * (g.x[k] + 1.0);  // in [0,1]
      const double wk = 0.5 * a * g.w[k];
      const double yr = (right + u * a - half) / half, br = 1.0 - u;
      const double yl = (left + u * a - half) / half, bl = u;
      double pr = 1.0, pl = 1.0;
      for (int j = 0; j <= jmax; ++j) {
        mu[j][m] += wk * (br * pr + bl * pl);
        pr *= yr;
        pl *= yl;
      }
    }
  }
  return mu;
}

}  // namespace

LatticeWeights compute_lattice_weights(const ModelParams& m, double L, int n, const QuadratureSpec& quad,
                                       kernels::Backend backend) {
  m.validate();
  if (!(m.tau > 0.0)) throw Error("lattice weights need tau > 0");
  if (n < 2) throw Error("lattice weights need n >= 2");
  const int d = m.d;
  const double t = m.t();
  const int shells = std::max({quad.periodization_terms, static_cast<int>(std::ceil(quad.zeta_cutoff / L)), 2});

  kernels::NearFieldTask task;
  task.d = d;
  task.n = n;
  task.a = L / n;
  task.t = t;
  task.p = m.p;
  task.shells = shells;
  LatticeWeights out;
  out.d = d;
  out.n = n;
  out.L = L;
  out.w = kernels::near_field_weights(task, backend);
  double abs_near = 0.0;
  for (double v : out.w) abs_near += std::abs(v);

  // far blocks: Taylor expansion of K about each block centre, summed over
  // all shells >= shells in closed form through Hurwitz zeta values
  std::vector<double> poly{1.0};  // multiplicity of a shell as polynomial in x = N + d/2 + t/L
  double fact = 1.0;
  for (int i = 1; i < d; ++i) {
    const double shift = i - 0.5 * d - t / L;
    std::vector<double> nxt(poly.size() + 1, 0.0);
    for (size_t r = 0; r < poly.size(); ++r) {
      nxt[r] += poly[r] * shift;
      nxt[r + 1] += poly[r];
    }
    poly = nxt;
    fact *= i;
  }
  for (double& c : poly) c /= fact;
  const double x0 = shells + 0.5 * d + t / L;
  const auto mu = hat_moments(n, L, kMaxFarOrder);
  const long cells = ipow(n, d);
  std::vector<double> far(cells, 0.0);
  std::vector<int> c(d);
  double wmax = 0.0;
  for (double v : out.w) wmax = std::max(wmax, std::abs(v));
  double poch = 1.0;  // (p)_j
  double last = 0.0;
  int j = 0;
  for (; j <= kMaxFarOrder; j += 2) {
    double zsum = 0.0;
    for (size_t r = 0; r < poly.size(); ++r) zsum += poly[r] * hurwitz_zeta(m.p + j - r, x0);
    const double fj = poch * std::pow(2.0, d - j) * std::pow(L, -m.p) * zsum;
    std::vector<std::vector<int>> alphas;
    std::vector<int> cur;
    even_multi_indices(d, j, cur, alphas);
    double tmax = 0.0;
    for (long idx = 0; idx < cells; ++idx) {
      lattice_coords(idx, n, c);
      double term = 0.0;
      for (const auto& al : alphas) {
        double prod = fj;
        for (int i = 0; i < d; ++i) prod *= mu[al[i]][c[i]] / std::tgamma(al[i] + 1.0);
        term += prod;
      }
      far[idx] += term;
      tmax = std::max(tmax, std::abs(term));
    }
    last = tmax;
    poch *= (m.p + j) * (m.p + j + 1);
    if (j >= 4 && tmax <= 1e-17 * wmax) break;
  }
  out.far_order = std::min(j, kMaxFarOrder);
  for (long idx = 0; idx < cells; ++idx) out.w[idx] += far[idx];
  out.mass = 0.0;
  for (double v : out.w) out.mass += v;
  out.error_bound = 10.0 * task.rel_tol * abs_near + 2.0 * last * cells;
  return out;
}

std::shared_ptr<const LatticeWeights> lattice_weights(const ModelParams& m, double L, int n,
                                                      const QuadratureSpec& quad, kernels::Backend backend) {
  using Key = std::tuple<int, double, double, double, int, int, double>;
  static std::mutex mtx;
  static std::map<Key, std::shared_ptr<const LatticeWeights>> cache;
  const Key key{m.d, m.p, m.tau, L, n, quad.periodization_terms, quad.zeta_cutoff};
  {
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto w = std::make_shared<const LatticeWeights>(compute_lattice_weights(m, L, n, quad, backend));
  std::lock_guard<std::mutex> lk(mtx);
  if (cache.size() > 64) cache.clear();
  cache.emplace(key, w);
  return w;
}

}  // namespace stripes
