// Acceptance run: one line per criterion, nonzero exit if any fails.
#include <boost/math/quadrature/exp_sinh.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "stripes/functional.hpp"
#include "stripes/kernel.hpp"
#include "stripes/stripe1d.hpp"
#include "stripes/verify.hpp"

using namespace stripes;

namespace {

int failures = 0;

void report(int id, const std::string& what, bool ok, const std::string& detail, double seconds) {
  std::printf("[%s] %2d %-34s %s (%.1fs)\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

template <class F>
void timed(int id, const std::string& what, F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    f(ok, detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  report(id, what, ok, detail, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int k = 0; k < n; ++k) v[k] = a + (b - a) * k / (n - 1);
  return v;
}

// int over R^dims of (r + |y|_1 + t)^-p by nested half-line quadrature
double transverse(double r, int dims, double p, double t) {
  if (dims == 0) return std::pow(r + t, -p);
  boost::math::quadrature::exp_sinh<double> es;
  return 2.0 * es.integrate([&](double y) { return transverse(r + y, dims - 1, p, t); }, 1e-14);
}

PeriodicSet random_grid_set(int n, double L, std::mt19937_64& rng) {
  std::vector<std::uint8_t> c(static_cast<size_t>(n) * n, 0);
  const int kind = rng() % 3;
  if (kind == 0) {  // union of random rectangles
    const int nb = 2 + rng() % 10;
    for (int b = 0; b < nb; ++b) {
      const int x0 = rng() % n, y0 = rng() % n, wx = 1 + rng() % (n / 2), wy = 1 + rng() % (n / 2);
      for (int y = 0; y < wy; ++y)
        for (int x = 0; x < wx; ++x) c[static_cast<size_t>((y0 + y) % n) * n + (x0 + x) % n] = 1;
    }
  } else if (kind == 1) {  // i.i.d. cells
    const double dens = 0.1 + 0.8 * (rng() % 1000) / 1000.0;
    for (auto& v : c) v = (rng() % 1000) < dens * 1000;
  } else {  // stripes with random width and defects
    const int w = 2 + rng() % 10;
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < n; ++x) c[static_cast<size_t>(y) * n + x] = (x / w) % 2;
    const int flips = rng() % 200;
    for (int k = 0; k < flips; ++k) c[rng() % c.size()] ^= 1;
  }
  return PeriodicSet::from_grid(2, L, n, c);
}

}  // namespace

int main() {
  std::printf("acceptance criteria\n");

  timed(1, "closed-form anchor", [](bool& ok, std::string& det) {
    const ModelParams m{1, 3.0, 0.0};
    const auto r = h_star(m);
    const double dh = std::abs(r.h - 4.0 * std::log(2.0));
    const double de = std::abs(e_tau(r.h, m) + 1.0 / (8.0 * std::log(2.0)));
    ok = dh <= 1e-8 && de <= 1e-10;
    det = fmt("|h*-4ln2|=%.2e |e+1/(8ln2)|=%.2e", dh, de);
  });

  timed(2, "series vs direct energy", [](bool& ok, std::string& det) {
    double worst = 0.0;
    int count = 0;
    for (int d : {1, 2})
      for (double tau : linspace(0.01, 0.05, 5))
        for (double h : linspace(1.0, 5.0, 5)) {
          const ModelParams m{d, d + 2.0, tau};
          QuadratureSpec q;
          q.grid_n = 16;
          const auto E = make_stripes(0, h, 0.0, 2.0 * h, d);
          const double ref = e_tau(h, m), got = direct_energy(E, m, q).total;
          worst = std::max(worst, std::abs(got - ref) / std::abs(ref));
          ++count;
        }
    ok = worst <= 1e-5;
    det = fmt("%g cases, max rel dev %.2e", count, worst);
  });

  timed(3, "decomposition equality on stripes", [](bool& ok, std::string& det) {
    const ModelParams m{2, 4.0, 0.02};
    const double hs = h_star(m).h;
    double worst = 0.0;
    for (double f : {0.75, 1.0, 1.5}) {
      const double h = f * hs;
      QuadratureSpec q;
      q.grid_n = 32;
      const auto E = make_stripes(0, h, 0.0, 4.0 * h, 2);
      const double a = direct_energy(E, m, q).total, b = decomposed_energy(E, m, q).total;
      worst = std::max(worst, std::abs(a - b) / std::abs(a));
    }
    ok = worst <= 1e-5;
    det = fmt("3 periods, max rel dev %.2e", worst);
  });

  timed(4, "decomposition lower bound", [](bool& ok, std::string& det) {
    const ModelParams m{2, 4.0, 0.02};
    std::mt19937_64 rng(2024);
    QuadratureSpec q;
    q.grid_n = 64;
    double worst = -INFINITY;
    for (int k = 0; k < 100; ++k) {
      const auto E = random_grid_set(64, 16.0, rng);
      worst = std::max(worst, decomposed_energy(E, m, q).total - direct_energy(E, m, q).total);
    }
    ok = worst <= 1e-6;
    det = fmt("100 sets, max(decomposed-direct) %.2e", worst);
  });

  timed(5, "kernel moment identity", [](bool& ok, std::string& det) {
    double worst = 0.0;
    for (int d : {1, 2, 3})
      for (double tau : {1.0, 0.1, 0.01}) {
        const ModelParams m{d, d + 2.0, tau};
        boost::math::quadrature::exp_sinh<double> es;
        const double t = m.t();
        const double mom = 2.0 * es.integrate([&](double r) { return r * transverse(r, d - 1, m.p, t); }, 1e-14);
        const double ref = kernel_constants(m).m1;
        worst = std::max(worst, std::abs(mom - ref) / ref);
      }
    ok = worst <= 1e-8;
    det = fmt("9 cases, max rel dev %.2e", worst);
  });

  timed(6, "stripe distance DP and Lipschitz", [](bool& ok, std::string& det) {
    const auto r = check_stripe_distance(200, 500, 7);
    ok = r.passed;
    det = "margin " + fmt("%.3g", r.margin) + " " + r.witness;
  });

  timed(7, "penalization bound", [](bool& ok, std::string& det) {
    ok = true;
    for (double tau : {0.01, 0.05}) {
      const auto r = check_penalization_bound(ModelParams{1, 3.0, tau}, 1000, 11);
      ok = ok && r.passed;
      det += fmt("tau=%g margin %.3g ", tau, r.margin);
      for (const char* key : {"eta0_empirical", "worst_margin_without_floor"}) {
        const auto p = r.witness.find(key);
        det += r.witness.substr(p - 1, r.witness.find_first_of(",}", p) - p + 1) + " ";
      }
    }
  });

  timed(8, "1d optimization lower bound", [](bool& ok, std::string& det) {
    const auto r = check_1d_optimization(ModelParams{1, 3.0, 0.01}, {10, 20, 40}, 1000, 13);
    ok = r.passed;
    det = fmt("margin %.3g", r.margin);
  });

  timed(9, "period drift and convexity", [](bool& ok, std::string& det) {
    const ModelParams m{1, 3.0, 0.01};
    const double e0 = h_star(with_tau(m, 0.0)).energy;
    const auto r = check_convexity_and_window(m, {0.01, 0.005}, {20, 40, 80, 160, 320}, 0.05 * std::abs(e0));
    ok = r.passed;
    det = fmt("%g samples, margin %.3g", r.samples, r.margin);
  });

  timed(10, "stripes beat other patterns (d=2)", [](bool& ok, std::string& det) {
    const auto c = compare_patterns(ModelParams{2, 4.0, 0.02}, 96);
    ok = c.outcome.passed;
    det = fmt("margin %.4g", c.outcome.margin) + " " + c.outcome.witness;
  });

  std::printf("%s: %d failing\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
