#include "stripes/kernels/cross_terms.hpp"

#include "stripes/setgeom.hpp"

namespace stripes::kernels {

std::vector<double> cross_cell_sums(const std::vector<std::uint8_t>& bits, const std::vector<double>& W,
                                    int n, int d, int axis, Backend backend) {
  const long N = ipow(n, d);
  const long P = N / n;
  std::vector<double> out(N, 0.0);
  if (d == 1) return out;
  // W regrouped as [m_axis][m_perp], m_perp flattened over the other axes
  std::vector<double> wp(N);
  std::vector<int> perp_axes;
  for (int j = 0; j < d; ++j)
    if (j != axis) perp_axes.push_back(j);
  {
    std::vector<int> mm(d);
    for (long m = 0; m < N; ++m) {
      lattice_coords(m, n, mm);
      long mp = 0;
      for (int k = d - 2; k >= 0; --k) mp = mp * n + mm[perp_axes[k]];
      wp[mm[axis] * P + mp] = W[m];
    }
  }
  auto one = [&](long c, std::vector<double>& B, std::vector<int>& cc, std::vector<int>& tmp,
                 std::vector<int>& pp) {
    lattice_coords(c, n, cc);
    const std::uint8_t bc = bits[c];
    bool any = false;
    std::vector<std::uint8_t> along(n);
    tmp = cc;
    for (int k = 0; k < n; ++k) {
      tmp[axis] = cc[axis] + k;
      along[k] = bits[lattice_index(tmp, n)] != bc;
      any = any || along[k];
    }
    if (!any) return;
    tmp = cc;
    for (long mp = 0; mp < P; ++mp) {
      lattice_coords(mp, n, pp);
      for (int k = 0; k < d - 1; ++k) tmp[perp_axes[k]] = cc[perp_axes[k]] + pp[k];
      B[mp] = bits[lattice_index(tmp, n)] != bc ? 1.0 : 0.0;
    }
    double s = 0.0;
    for (int k = 0; k < n; ++k) {
      if (!along[k]) continue;
      const double* row = &wp[k * P];
      double acc = 0.0;
      for (long mp = 0; mp < P; ++mp) acc += row[mp] * B[mp];
      s += acc;
    }
    out[c] = s;
  };
  if (backend == Backend::parallel) {
#pragma omp parallel
    {
      std::vector<double> B(P);
      std::vector<int> cc(d), tmp(d), pp(d - 1);
#pragma omp for schedule(dynamic, 16)
      for (long c = 0; c < N; ++c) one(c, B, cc, tmp, pp);
    }
  } else {
    std::vector<double> B(P);
    std::vector<int> cc(d), tmp(d), pp(d - 1);
    for (long c = 0; c < N; ++c) one(c, B, cc, tmp, pp);
  }
  return out;
}

}  // namespace stripes::kernels
