#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <vector>

#include "stripes/kernel.hpp"

using namespace stripes;
using boost::math::quadrature::exp_sinh;

namespace {

// integral over R^{dims} of (r + |y|_1 + t)^-p, by nested half-line quadrature
double marginal(double r, int dims, double p, double t) {
  if (dims == 0) return std::pow(r + t, -p);
  exp_sinh<double> es;
  return 2.0 * es.integrate([&](double y) { return marginal(r + y, dims - 1, p, t); }, 1e-13);
}

}  // namespace

TEST_CASE("kernel scaling") {
  const ModelParams m{2, 4.0, 0.03};
  const double t = std::pow(m.tau, 1.0 / m.beta());
  const std::vector<double> z{0.3, -0.7};
  CHECK(k_tau(z, m) == doctest::Approx(std::pow(1.0 + t, -4.0)));
  CHECK(k_tau(z, m) == doctest::Approx(std::pow(m.tau, -m.p / m.beta()) * k1(std::vector<double>{0.3 / t, -0.7 / t}, m.p)));
  CHECK_THROWS(k_tau(z, ModelParams{2, 4.0, 0.0}));
}

TEST_CASE("marginal matches transverse quadrature") {
  for (auto [d, p] : {std::pair{1, 3.0}, {2, 4.0}, {2, 5.5}, {3, 6.0}}) {
    const ModelParams m{d, p, 0.2};
    const double t = m.t();
    for (double rho : {0.0, 0.4, -2.5, 10.0}) {
      CHECK(khat_tau(rho, m) == doctest::Approx(marginal(std::abs(rho), d - 1, p, t)).epsilon(1e-10));
      CHECK(khat1(rho, m) == doctest::Approx(marginal(std::abs(rho), d - 1, p, 1.0)).epsilon(1e-10));
    }
  }
}

TEST_CASE("constants") {
  const ModelParams m{2, 4.0, 0.02};
  const auto kc = kernel_constants(m);
  const double q = m.q();
  CHECK(kc.c1 == doctest::Approx(std::pow(2.0, m.d - 1) * boost::math::tgamma(m.p - m.d + 1) / boost::math::tgamma(m.p)));
  CHECK(kc.c2 == doctest::Approx(1.0 / ((q - 1) * (q - 2))));
  CHECK(kc.m1 == doctest::Approx(2.0 * kc.c1 * kc.c2 / m.tau));
}

TEST_CASE("kernel mass") {
  for (auto [d, p] : {std::pair{1, 3.0}, {2, 4.0}, {3, 7.0}}) {
    const ModelParams m{d, p, 0.1};
    CHECK(kernel_mass(m) == doctest::Approx(marginal(0.0, d, p, m.t())).epsilon(1e-9));
  }
}

TEST_CASE("second primitive") {
  const ModelParams m{1, 3.5, 0.05};
  const double h = 1e-3;
  for (double x : {0.5, 3.0}) {
    const double dd = khat_primitive2(x + h, m) - 2 * khat_primitive2(x, m) + khat_primitive2(x - h, m);
    CHECK(dd / (h * h) == doctest::Approx(khat_tau(x, m)).epsilon(1e-5));
  }
  // periodic sum against a long direct sum plus integral tail
  const double L = 2.0;
  double s = 0.0;
  for (int k = 0; k < 200000; ++k) s += khat_primitive2(0.3 + k * L, m);
  const double q = m.q();
  const auto kc = kernel_constants(m);
  s += kc.c1 * kc.c2 * std::pow(0.3 + 200000 * L + m.t(), 3.0 - q) / ((q - 3.0) * L);
  CHECK(khat_primitive2_periodic(0.3, L, m) == doctest::Approx(s).epsilon(1e-7));
}
