#include <doctest.h>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <random>

#include "stripes/functional.hpp"
#include "stripes/stripe1d.hpp"

using namespace stripes;
using boost::math::quadrature::gauss;

namespace {

// periodic overlap of [0, a) with [u, u + a), any u
double ov(double u, double a, double L) {
  u = std::fmod(std::fmod(u, L) + L, L);
  return std::max(0.0, a - u) + std::max(0.0, a - (L - u));
}

// sorted breakpoints of ov on [-R, R], graded towards 0 where K peaks
std::vector<double> kinks(double a, double L, double R, double t) {
  std::vector<double> k;
  for (double x = t / 16.0; x < L; x *= 2.0) {
    k.push_back(x);
    k.push_back(-x);
  }
  for (double base = -R; base <= R + 1e-12; base += L)
    for (double off : {0.0, a, L - a})
      if (base + off <= R + 1e-12) k.push_back(base + off);
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end(), [](double x, double y) { return std::abs(x - y) < 1e-12; }), k.end());
  return k;
}

// Raw evaluation of the functional for the single box [0,a)^(x)[0,b) (d = 2)
// or [0,a) (d = 1) on the torus: -Per + m1 Per - int K g, with the zeta
// integral done by Gauss quadrature between kinks of g on [-R, R]^d and the
// remainder replaced by mean(g) times the kernel mass outside.
double raw_box_energy(int d, double p, double tau, double a, double b, double L, int periods) {
  const double beta = p - d - 1.0, t = std::pow(tau, 1.0 / beta);
  const double R = periods * L;
  auto K = [&](double r) { return std::pow(r + t, -p); };
  // m1 = int |zeta_1| K and the kernel mass, both in closed form
  const double mass = std::pow(2.0, d) * boost::math::tgamma(p - d) / boost::math::tgamma(p) * std::pow(t, d - p);
  const double m1 = std::pow(2.0, d) * boost::math::tgamma(p - d - 1) / boost::math::tgamma(p) * std::pow(t, d + 1 - p);
  const double vol = d == 1 ? a : a * b;
  const double per = d == 1 ? 2.0 : 2.0 * (a + b);
  const double gbar = 2.0 * (vol - vol * vol / std::pow(L, d));
  double inner = 0.0, kmass_box = 0.0;
  const auto kx = kinks(a, L, R, t);
  if (d == 1) {
    for (size_t i = 0; i + 1 < kx.size(); ++i) {
      auto f = [&](double x) { return K(std::abs(x)) * (2.0 * (a - ov(x, a, L)) - gbar); };
      inner += gauss<double, 20>::integrate(f, kx[i], kx[i + 1]);
      kmass_box += gauss<double, 20>::integrate([&](double x) { return K(std::abs(x)); }, kx[i], kx[i + 1]);
    }
  } else {
    const auto ky = kinks(b, L, R, t);
    for (size_t i = 0; i + 1 < kx.size(); ++i)
      for (size_t j = 0; j + 1 < ky.size(); ++j) {
        auto fy = [&](double y) {
          return gauss<double, 12>::integrate(
              [&](double x) {
                const double k = K(std::abs(x) + std::abs(y));
                return k * (2.0 * (vol - ov(x, a, L) * ov(y, b, L)) - gbar);
              },
              kx[i], kx[i + 1]);
        };
        inner += gauss<double, 12>::integrate(fy, ky[j], ky[j + 1]);
        kmass_box += gauss<double, 12>::integrate(
            [&](double y) {
              return gauss<double, 12>::integrate([&](double x) { return K(std::abs(x) + std::abs(y)); }, kx[i],
                                                 kx[i + 1]);
            },
            ky[j], ky[j + 1]);
      }
  }
  (void)kmass_box;
  const double nonlocal = inner + gbar * mass;
  return ((m1 - 1.0) * per - nonlocal) / std::pow(L, d);
}

PeriodicSet random_blobs(int n, double L, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::uint8_t> c(static_cast<size_t>(n) * n, 0);
  const int nb = 2 + rng() % 6;
  for (int k = 0; k < nb; ++k) {
    const int x0 = rng() % n, y0 = rng() % n, wx = 1 + rng() % (n / 2), wy = 1 + rng() % (n / 2);
    for (int y = 0; y < wy; ++y)
      for (int x = 0; x < wx; ++x) c[static_cast<size_t>((y0 + y) % n) * n + (x0 + x) % n] ^= 1;
  }
  return PeriodicSet::from_grid(2, L, n, c);
}

}  // namespace

TEST_CASE("direct energy against raw quadrature, d = 1") {
  const ModelParams m{1, 3.0, 0.05};
  const double L = 4.0, a = 1.25;
  QuadratureSpec q;
  q.grid_n = 64;
  const auto E = PeriodicSet::from_boxes(1, L, {Box{{0.0}, {a}}});
  const double raw = raw_box_energy(1, 3.0, 0.05, a, 0.0, L, 4000);
  CHECK(direct_energy(E, m, q).total == doctest::Approx(raw).epsilon(1e-7));
}

TEST_CASE("direct energy against raw quadrature, d = 2") {
  const ModelParams m{2, 5.0, 0.1};
  const double L = 2.0, a = 0.75, b = 1.25;
  QuadratureSpec q;
  q.grid_n = 16;
  const auto E = PeriodicSet::from_boxes(2, L, {Box{{0.0, 0.0}, {a, b}}});
  const double raw = raw_box_energy(2, 5.0, 0.1, a, b, L, 24);
  CHECK(direct_energy(E, m, q).total == doctest::Approx(raw).epsilon(1e-6));
}

TEST_CASE("empty and full sets have zero energy") {
  const ModelParams m{2, 4.0, 0.05};
  const auto E = PeriodicSet::from_boxes(2, 4.0, {});
  CHECK(direct_energy(E, m).total == 0.0);
  CHECK(decomposed_energy(E, m).total == 0.0);
  const auto F = complement(E);
  CHECK(direct_energy(F, m).total == 0.0);
}

TEST_CASE("stripes reproduce the series energy") {
  for (int d : {1, 2}) {
    const ModelParams m{d, 2.0 + d, 0.05};
    for (double h : {1.0, 2.5}) {
      const auto E = make_stripes(0, h, 0.0, 4.0 * h, d);
      QuadratureSpec q;
      q.grid_n = 32;
      const double ref = e_tau(h, m);
      CHECK(direct_energy(E, m, q).total == doctest::Approx(ref).epsilon(1e-9));
      CHECK(decomposed_energy(E, m, q).total == doctest::Approx(ref).epsilon(1e-9));
    }
  }
}

TEST_CASE("orientation symmetry") {
  const ModelParams m{2, 4.0, 0.02};
  QuadratureSpec q;
  q.grid_n = 32;
  const auto A = make_stripes(0, 2.0, 0.0, 8.0, 2), B = make_stripes(1, 2.0, 0.0, 8.0, 2);
  CHECK(direct_energy(A, m, q).total == doctest::Approx(direct_energy(B, m, q).total).epsilon(1e-13));
}

TEST_CASE("r on a stripe profile sums to the stripe energy") {
  const ModelParams m{1, 3.0, 0.02};
  const double h = 2.0, L = 8.0;
  SliceProfile sp{L, {0.0, 2.0, 4.0, 6.0}, true};
  double s = 0.0;
  for (double b : sp.boundaries) s += r_tau_1d(sp, b, m);
  CHECK(s == doctest::Approx(L * e_tau(h, m)).epsilon(1e-11));
}

TEST_CASE("r blows up like gap^-beta for a closing gap") {
  const ModelParams m{1, 3.0, 1e-6};
  double prev = -INFINITY;
  for (double g : {0.4, 0.2, 0.1, 0.05}) {
    SliceProfile sp{20.0, {0.0, g, 10.0, 10.0 + g}, true};
    const double r = r_tau_1d(sp, g, m);
    CHECK(r > prev);
    prev = r;
  }
  // an isolated interval of width g costs about 2/g in excess, 1/g = 2 c1 c2 / g per end
  SliceProfile sp{20.0, {0.0, 0.01, 10.0, 10.01}, true};
  CHECK(r_tau_1d(sp, 0.01, m) * 0.01 == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("decomposition is a lower bound and matches in low dimension") {
  const ModelParams m{2, 4.0, 0.03};
  QuadratureSpec q;
  q.grid_n = 32;
  for (unsigned s = 1; s <= 6; ++s) {
    const auto E = random_blobs(32, 8.0, s);
    const double a = direct_energy(E, m, q).total, b = decomposed_energy(E, m, q).total;
    CHECK(b <= a + 1e-10);
    CHECK(b == doctest::Approx(a).epsilon(1e-10));
  }
}

TEST_CASE("three-dimensional lower bound") {
  const ModelParams m{3, 5.0, 0.05};
  QuadratureSpec q;
  q.grid_n = 8;
  std::mt19937 rng(5);
  std::vector<std::uint8_t> c(512);
  for (auto& v : c) v = rng() % 3 == 0;
  const auto E = PeriodicSet::from_grid(3, 4.0, 8, c);
  CHECK(decomposed_energy(E, m, q).total <= direct_energy(E, m, q).total + 1e-10);
}

TEST_CASE("averaging local energies over node-aligned cubes gives the total") {
  const ModelParams m{2, 4.0, 0.03};
  QuadratureSpec q;
  q.grid_n = 32;
  const auto E = random_blobs(32, 8.0, 11);
  const Decomposition dec(E, m, q);
  const double a = dec.cell();
  double avg = 0.0;
  for (int j = 0; j < 32; ++j)
    for (int i = 0; i < 32; ++i) {
      const std::vector<double> z{i * a, j * a};
      avg += dec.local(z, 8 * a).total;
    }
  avg /= 32.0 * 32.0;
  CHECK(avg == doctest::Approx(dec.report().total).epsilon(1e-12));
}

TEST_CASE("checkerboard has positive cross terms in both directions") {
  std::vector<std::uint8_t> c(256);
  for (int y = 0; y < 16; ++y)
    for (int x = 0; x < 16; ++x) c[y * 16 + x] = ((x / 2) + (y / 2)) % 2;
  const auto E = PeriodicSet::from_grid(2, 4.0, 16, c);
  const auto r = decomposed_energy(E, ModelParams{2, 4.0, 0.05});
  for (const auto& t : r.per_direction) {
    CHECK(t.v_sum > 0.0);
    CHECK(t.w_sum > 0.0);
  }
}

TEST_CASE("coarse grid and tau = 0") {
  const ModelParams m{2, 4.0, 0.03};
  QuadratureSpec q;
  q.grid_n = 8;
  const auto E = make_stripes(0, 1.0, 0.0, 8.0, 2);
  CHECK(direct_energy(E, m, q).coarse_grid_warning);
  CHECK_THROWS(direct_energy(E, ModelParams{2, 4.0, 0.0}, q));
}
