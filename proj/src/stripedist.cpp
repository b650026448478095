#include "stripes/stripedist.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <queue>

#include "stripes/kernels/stripe_field.hpp"

namespace stripes {

namespace {

struct Piece {
  int k;
  double w;
};

std::vector<Piece> overlaps(double lo, double hi, double a, int n) {
  std::vector<Piece> out;
  const long k0 = static_cast<long>(std::floor(lo / a));
  const long k1 = static_cast<long>(std::ceil(hi / a));
  for (long k = k0; k < k1; ++k) {
    const double w = std::min((k + 1) * a, hi) - std::max(k * a, lo);
    if (w > 0.0) out.push_back({static_cast<int>(((k % n) + n) % n), w});
  }
  return out;
}

double circle_overlap(double a, double wa, double b, double wb, double L) {
  double tot = 0.0;
  for (int k = -1; k <= 1; ++k) {
    const double lo = std::max(a, b + k * L);
    const double hi = std::min(a + wa, b + wb + k * L);
    if (hi > lo) tot += hi - lo;
  }
  return tot;
}

// sum over the product of per-axis pieces of bits * prod(w)
double grid_sum(const PeriodicSet& E, const std::vector<std::vector<Piece>>& lists) {
  const int d = E.dim(), n = E.grid_n();
  for (const auto& l : lists)
    if (l.empty()) return 0.0;
  std::vector<size_t> pos(d, 0);
  std::vector<int> c(d);
  double s = 0.0;
  while (true) {
    double w = 1.0;
    for (int j = 0; j < d; ++j) {
      c[j] = lists[j][pos[j]].k;
      w *= lists[j][pos[j]].w;
    }
    if (E.cells()[lattice_index(c, n)]) s += w;
    int j = 0;
    for (; j < d; ++j) {
      if (++pos[j] < lists[j].size()) break;
      pos[j] = 0;
    }
    if (j == d) return s;
  }
}

}  // namespace

double measure_in_box(const PeriodicSet& E, std::span<const double> lo, std::span<const double> hi) {
  const int d = E.dim();
  const double L = E.period();
  if (E.is_grid()) {
    std::vector<std::vector<Piece>> lists(d);
    for (int j = 0; j < d; ++j) lists[j] = overlaps(lo[j], hi[j], E.cell_size(), E.grid_n());
    return grid_sum(E, lists);
  }
  double s = 0.0;
  for (const auto& b : E.boxes()) {
    double p = 1.0;
    for (int j = 0; j < d && p > 0.0; ++j)
      p *= circle_overlap(b.lo[j], b.hi[j] - b.lo[j], wrap(lo[j], L), hi[j] - lo[j], L);
    s += p;
  }
  return s;
}

std::vector<double> column_occupancy(const PeriodicSet& E, const Cube& Q, int i, int resolution) {
  const int d = E.dim();
  const double L = E.period();
  if (i < 0 || i >= d) throw Error("axis out of range");
  if (static_cast<int>(Q.z.size()) != d) throw Error("cube centre has wrong dimension");
  if (!(Q.l > 0.0) || Q.l > L) throw Error("cube side must lie in (0, L]");
  if (resolution < 1) throw Error("resolution must be positive");
  const double w = Q.l / resolution;
  const double cross = std::pow(Q.l, d - 1);
  std::vector<double> a(resolution);
  const double lo_i = Q.z[i] - 0.5 * Q.l;
  if (E.is_grid()) {
    // column sums over the cross-section, then fractional pieces along i
    const int n = E.grid_n();
    const double cs = E.cell_size();
    std::vector<std::vector<Piece>> lists(d);
    for (int j = 0; j < d; ++j)
      if (j != i) lists[j] = overlaps(Q.z[j] - 0.5 * Q.l, Q.z[j] + 0.5 * Q.l, cs, n);
    std::vector<double> col(n, 0.0);
    for (int k = 0; k < n; ++k) {
      lists[i] = {{k, 1.0}};
      col[k] = grid_sum(E, lists);
    }
    for (int r = 0; r < resolution; ++r) {
      double s = 0.0;
      for (const auto& p : overlaps(lo_i + r * w, lo_i + (r + 1) * w, cs, n)) s += col[p.k] * p.w;
      a[r] = std::clamp(s / (w * cross), 0.0, 1.0);
    }
    return a;
  }
  std::vector<double> lo(d), hi(d);
  for (int j = 0; j < d; ++j) {
    lo[j] = Q.z[j] - 0.5 * Q.l;
    hi[j] = Q.z[j] + 0.5 * Q.l;
  }
  for (int r = 0; r < resolution; ++r) {
    lo[i] = lo_i + r * w;
    hi[i] = lo_i + (r + 1) * w;
    a[r] = std::clamp(measure_in_box(E, lo, hi) / (w * cross), 0.0, 1.0);
  }
  return a;
}

ProfileFit fit_profile_dp(std::span<const double> occ, double cell_width, double eta) {
  const int R = static_cast<int>(occ.size());
  if (R == 0) return {};
  if (!(eta > 0.0)) throw Error("eta must be positive");
  const int m = std::max(1, static_cast<int>(std::ceil(eta / cell_width - 1e-9)));
  const double inf = std::numeric_limits<double>::infinity();
  // state index v * m + (age - 1), age capped at m
  const int S = 2 * m;
  std::vector<double> cost(S, inf), next(S);
  std::vector<int> from(static_cast<size_t>(R) * S, -1);
  auto cell_cost = [&](int k, int v) { return cell_width * (v ? 1.0 - occ[k] : occ[k]); };
  cost[0 * m + m - 1] = cell_cost(0, 0);
  cost[1 * m + m - 1] = cell_cost(0, 1);
  for (int k = 1; k < R; ++k) {
    std::fill(next.begin(), next.end(), inf);
    for (int s = 0; s < S; ++s) {
      if (cost[s] == inf) continue;
      const int v = s / m, age = s % m + 1;
      const int stay = v * m + std::min(age + 1, m) - 1;
      const double cs = cost[s] + cell_cost(k, v);
      if (cs < next[stay]) {
        next[stay] = cs;
        from[static_cast<size_t>(k) * S + stay] = s;
      }
      if (age >= m) {
        const int sw = (1 - v) * m + 0;
        const double cw = cost[s] + cell_cost(k, 1 - v);
        if (cw < next[sw]) {
          next[sw] = cw;
          from[static_cast<size_t>(k) * S + sw] = s;
        }
      }
    }
    std::swap(cost, next);
  }
  int best = 0;
  for (int s = 1; s < S; ++s)
    if (cost[s] < cost[best]) best = s;
  ProfileFit out;
  out.cost = cost[best];
  out.g.resize(R);
  int s = best;
  for (int k = R - 1; k >= 0; --k) {
    out.g[k] = static_cast<std::uint8_t>(s / m);
    if (k > 0) s = from[static_cast<size_t>(k) * S + s];
  }
  return out;
}

StripeFitResult d_eta_i(const PeriodicSet& E, const Cube& Q, int i, double eta, int resolution) {
  if (!(eta > 0.0)) throw Error("eta must be positive");
  const double w = Q.l / resolution;
  if (w > 0.25 * eta * (1.0 + 1e-12)) throw Error("resolution too coarse: cell must be <= eta/4");
  const auto occ = column_occupancy(E, Q, i, resolution);
  const ProfileFit fit = fit_profile_dp(occ, w, eta);
  StripeFitResult r;
  r.direction = i;
  r.eta = eta;
  r.distance = fit.cost / Q.l;
  r.profile.length = Q.l;
  r.profile.starts_inside = fit.g.empty() ? false : fit.g[0] != 0;
  for (int k = 1; k < resolution; ++k)
    if (fit.g[k] != fit.g[k - 1]) r.profile.boundaries.push_back(k * w);
  r.discretization_bound = (r.profile.boundaries.size() + 1) * w / Q.l;
  return r;
}

StripeFitResult d_eta(const PeriodicSet& E, const Cube& Q, double eta, int resolution) {
  StripeFitResult best = d_eta_i(E, Q, 0, eta, resolution);
  for (int i = 1; i < E.dim(); ++i) {
    StripeFitResult r = d_eta_i(E, Q, i, eta, resolution);
    if (r.distance < best.distance) best = std::move(r);
  }
  return best;
}

namespace {

// periodic sup-norm dilation by r grid steps, one axis at a time
std::vector<std::uint8_t> dilate(std::vector<std::uint8_t> in, int m, int d, int r) {
  if (r <= 0) return in;
  const long M = ipow(m, d);
  std::vector<int> c(d);
  for (int j = 0; j < d; ++j) {
    std::vector<std::uint8_t> out(M, 0);
    for (long z = 0; z < M; ++z) {
      if (!in[z]) continue;
      lattice_coords(z, m, c);
      const int c0 = c[j];
      for (int s = -r; s <= r; ++s) {
        c[j] = c0 + s;
        out[lattice_index(c, m)] = 1;
      }
      c[j] = c0;
    }
    in.swap(out);
  }
  return in;
}

}  // namespace

CubeField classify_cubes(const PeriodicSet& E, const ClassifyOptions& opt, kernels::Backend backend) {
  const int d = E.dim();
  const double L = E.period();
  if (!(opt.l > 0.0) || !(opt.l < L)) throw Error("classify: cube side must lie in (0, L)");
  if (!(opt.delta > 0.0)) throw Error("classify: delta must be positive");
  CubeField f;
  f.d = d;
  f.L = L;
  const double cd = opt.lipschitz_const > 0.0 ? opt.lipschitz_const : static_cast<double>(d);
  f.rho = opt.rho > 0.0 ? opt.rho : opt.delta * opt.l / cd;
  const int mmin = static_cast<int>(std::ceil(4.0 * L / f.rho - 1e-9));
  if (opt.z_points > 0) {
    if (L / opt.z_points > 0.25 * f.rho * (1.0 + 1e-12))
      throw Error("classify: z-grid spacing must be <= rho/4 (need at least " + std::to_string(mmin) + " points per axis)");
    f.m = opt.z_points;
  } else {
    f.m = mmin;
  }
  const int m = f.m;
  const long M = ipow(m, d);
  const double step = L / m;
  f.dist = kernels::stripe_distance_field(E, m, opt.l, opt.eta, opt.resolution, backend);

  std::vector<std::uint8_t> t0(M, 0), tm1(M, 0);
  std::vector<int> orient(M, -1);
  for (long z = 0; z < M; ++z) {
    int below = 0, dir = -1;
    double mn = INFINITY;
    for (int i = 0; i < d; ++i) {
      const double v = f.dist[z * d + i];
      mn = std::min(mn, v);
      if (v <= opt.delta) {
        ++below;
        if (dir < 0) dir = i;
      }
    }
    t0[z] = mn >= opt.delta;
    tm1[z] = below >= 2;
    orient[z] = below == 1 ? dir : -1;
  }
  const auto a0 = dilate(t0, m, d, static_cast<int>(std::floor(f.rho / step + 1e-9)));
  const auto am1 = dilate(tm1, m, d, static_cast<int>(std::floor(opt.dilation_minus1 / step + 1e-9)));

  f.label.assign(M, "");
  f.component.assign(M, -1);
  std::vector<int> comp_dir;
  std::vector<int> c(d), cn(d);
  for (long z = 0; z < M; ++z) {
    if (a0[z]) {
      f.label[z] = "A0";
    } else if (am1[z]) {
      f.label[z] = "A-1";
    }
  }
  auto zstr = [&](long z) {
    lattice_coords(z, m, c);
    std::string s = "(";
    for (int j = 0; j < d; ++j) s += (j ? ", " : "") + std::to_string(c[j] * step);
    return s + ")";
  };
  for (long z0 = 0; z0 < M; ++z0) {
    if (!f.label[z0].empty() || f.component[z0] >= 0) continue;
    const int id = static_cast<int>(comp_dir.size());
    comp_dir.push_back(orient[z0]);
    std::queue<long> qu;
    qu.push(z0);
    f.component[z0] = id;
    while (!qu.empty()) {
      const long z = qu.front();
      qu.pop();
      if (orient[z] != comp_dir[id])
        throw Error("classify: inconsistent orientation between z = " + zstr(z0) + " and z = " + zstr(z));
      lattice_coords(z, m, c);
      for (int j = 0; j < d; ++j)
        for (int s : {-1, 1}) {
          cn = c;
          cn[j] += s;
          const long nz = lattice_index(cn, m);
          if (f.label[nz].empty() && f.component[nz] < 0) {
            f.component[nz] = id;
            qu.push(nz);
          }
        }
    }
  }
  // trimming along each oriented direction
  for (long z = 0; z < M; ++z)
    if (f.component[z] >= 0) f.label[z] = "B" + std::to_string(comp_dir[f.component[z]] + 1);
  const double quarter = 0.25 * opt.l;
  for (int i = 0; i < d; ++i) {
    const long lines = M / m;
    for (long line = 0; line < lines; ++line) {
      std::vector<int> pc(d);
      lattice_coords(line, m, std::span<int>(pc.data(), d - 1));
      std::vector<long> idx(m);
      for (int k = 0, q = 0; k < d; ++k)
        if (k != i) c[k] = pc[q++];
      for (int k = 0; k < m; ++k) {
        c[i] = k;
        idx[k] = lattice_index(c, m);
      }
      auto in_ai = [&](int k) {
        const long z = idx[((k % m) + m) % m];
        return f.component[z] >= 0 && comp_dir[f.component[z]] == i;
      };
      int start = -1;
      for (int k = 0; k < m; ++k)
        if (!in_ai(k)) {
          start = k;
          break;
        }
      if (start < 0) {
        for (int k = 0; k < m; ++k) f.label[idx[k]] = "A" + std::to_string(i + 1);
        continue;
      }
      for (int k = start + 1; k <= start + m; ++k) {
        if (!in_ai(k)) continue;
        int e = k;
        while (in_ai(e + 1)) ++e;
        const int cnt = e - k + 1;
        const double len = cnt * step;
        if (len >= opt.l - 1e-9 * step)
          for (int j = 0; j < cnt; ++j)
            if (j * step > quarter - 1e-9 * step && (cnt - j) * step > quarter - 1e-9 * step)
              f.label[idx[(k + j) % m]] = "A" + std::to_string(i + 1);
        k = e;
      }
    }
  }
  return f;
}

void CubeField::write_csv(std::ostream& os) const {
  for (int j = 0; j < d; ++j) os << 'z' << j + 1 << ',';
  os << "label";
  for (int j = 0; j < d; ++j) os << ",d" << j + 1;
  os << '\n';
  const long M = ipow(m, d);
  const double step = L / m;
  std::vector<int> c(d);
  char buf[40];
  for (long z = 0; z < M; ++z) {
    lattice_coords(z, m, c);
    for (int j = 0; j < d; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", c[j] * step);
      os << buf << ',';
    }
    os << label[z];
    for (int j = 0; j < d; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", dist[z * d + j]);
      os << ',' << buf;
    }
    os << '\n';
  }
}

}  // namespace stripes
