#include "stripes/kernels/near_field.hpp"

#include <cmath>
#include <cstdlib>

#include "stripes/setgeom.hpp"
#include "stripes/special.hpp"

namespace stripes::kernels {

namespace {

constexpr int kGroups = 16;
constexpr int kMaxOrder = 16;

struct Ctx {
  const NearFieldTask* task;
  double log_tol;
};

// Integrate K over the box [lo, lo+w)^d (lying in one orthant) against the
// 2^d corner hat functions of the enclosing cell [c0, c0+a)^d; add into acc.
void integrate_box(const Ctx& cx, const double* lo, double w, const double* c0, double* acc) {
  const NearFieldTask& tk = *cx.task;
  const int d = tk.d;
  double umin = 0.0;
  for (int i = 0; i < d; ++i) umin += lo[i] >= 0.0 ? lo[i] : -(lo[i] + w);
  const double delta = 2.0 * (umin + tk.t) / w;
  const double rho = delta + std::sqrt(delta * delta + 1.0);
  const int q = static_cast<int>(std::ceil(-0.5 * cx.log_tol / std::log(rho))) + 1;
  if (q > kMaxOrder) {
    const double h = 0.5 * w;
    double sub[8];
    for (int mask = 0; mask < (1 << d); ++mask) {
      for (int i = 0; i < d; ++i) sub[i] = lo[i] + ((mask >> i) & 1) * h;
      integrate_box(cx, sub, h, c0, acc);
    }
    return;
  }
  const GaussRule& g = gauss_legendre(std::max(q, 2));
  const int Q = static_cast<int>(g.x.size());
  int idx[8] = {0, 0, 0, 0, 0, 0, 0, 0};
  double frac[8];
  const long npts = ipow(Q, d);
  for (long pt = 0; pt < npts; ++pt) {
    long r = pt;
    double l1 = 0.0, wt = 1.0;
    for (int i = 0; i < d; ++i) {
      idx[i] = static_cast<int>(r % Q);
      r /= Q;
      const double x = lo[i] + 0.5 * w * (g.x[idx[i]] + 1.0);
      l1 += std::abs(x);
      wt *= 0.5 * w * g.w[idx[i]];
      frac[i] = (x - c0[i]) / tk.a;
    }
    const double kv = wt * std::pow(l1 + tk.t, -tk.p);
    for (int mask = 0; mask < (1 << d); ++mask) {
      double b = kv;
      for (int i = 0; i < d; ++i) b *= ((mask >> i) & 1) ? frac[i] : 1.0 - frac[i];
      acc[mask] += b;
    }
  }
}

struct Block {
  std::vector<int> k;
};

std::vector<Block> near_blocks(int d, int shells) {
  std::vector<Block> out;
  std::vector<int> k(d, -shells);
  while (true) {
    int s = 0;
    for (int v : k) s += v >= 0 ? v : -v - 1;
    if (s < shells) out.push_back({k});
    int i = 0;
    for (; i < d; ++i) {
      if (++k[i] < shells) break;
      k[i] = -shells;
    }
    if (i == d) break;
  }
  return out;
}

void accumulate_block(const Ctx& cx, const Block& blk, std::vector<double>& out) {
  const NearFieldTask& tk = *cx.task;
  const int d = tk.d, n = tk.n;
  const long cells = ipow(n, d);
  std::vector<int> c(d), j(d), corner(d);
  double lo[8], acc[8];
  for (long ci = 0; ci < cells; ++ci) {
    lattice_coords(ci, n, c);
    for (int i = 0; i < d; ++i) {
      j[i] = blk.k[i] * n + c[i];
      lo[i] = j[i] * tk.a;
    }
    for (double& v : acc) v = 0.0;
    integrate_box(cx, lo, tk.a, lo, acc);
    for (int mask = 0; mask < (1 << d); ++mask) {
      for (int i = 0; i < d; ++i) corner[i] = j[i] + ((mask >> i) & 1);
      out[lattice_index(corner, n)] += acc[mask];
    }
  }
}

}  // namespace

std::vector<double> near_field_weights(const NearFieldTask& task, Backend backend) {
  if (task.d < 1 || task.d > 3) throw Error("near field weights support d <= 3");
  const Ctx cx{&task, std::log(task.rel_tol)};
  const auto blocks = near_blocks(task.d, task.shells);
  const long cells = ipow(task.n, task.d);
  std::vector<std::vector<double>> part(kGroups, std::vector<double>(cells, 0.0));
  auto run_group = [&](int gidx) {
    for (size_t b = gidx; b < blocks.size(); b += kGroups) accumulate_block(cx, blocks[b], part[gidx]);
  };
  if (backend == Backend::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int gidx = 0; gidx < kGroups; ++gidx) run_group(gidx);
  } else {
    for (int gidx = 0; gidx < kGroups; ++gidx) run_group(gidx);
  }
  std::vector<double> w(cells, 0.0);
  for (int gidx = 0; gidx < kGroups; ++gidx)
    for (long m = 0; m < cells; ++m) w[m] += part[gidx][m];
  return w;
}

}  // namespace stripes::kernels
