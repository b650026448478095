#include <doctest.h>

#include <boost/math/special_functions/polygamma.hpp>
#include <cmath>

#include "stripes/kernel.hpp"
#include "stripes/stripe1d.hpp"

using namespace stripes;

namespace {

// C(s) for integer a = q - 2 through polygamma: sum (2k+1+s)^-a - (2k+2+s)^-a
double c_oracle(double s, const ModelParams& m) {
  const int a = static_cast<int>(std::lround(m.q() - 2.0));
  const auto kc = kernel_constants(m);
  const double fa = std::tgamma(a);
  const double x = (1.0 + s) / 2.0, y = (2.0 + s) / 2.0;
  // zeta(a, x) = (-1)^a psi^{(a-1)}(x) / (a-1)!, also right at a = 1 once regularized
  const double diff = std::pow(-1.0, a) * (boost::math::polygamma(a - 1, x) - boost::math::polygamma(a - 1, y)) / fa;
  return 4.0 * kc.c1 * kc.c2 * std::pow(2.0, -a) * diff;
}

}  // namespace

TEST_CASE("closed forms at tau = 0") {
  const ModelParams m1{1, 3.0, 0.0};
  CHECK(c_series(0.0, m1).value == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-14));
  const auto r1 = h_star(m1);
  CHECK(std::abs(r1.h - 4.0 * std::log(2.0)) < 1e-10);
  CHECK(std::abs(r1.energy + 1.0 / (8.0 * std::log(2.0))) < 1e-12);
  const ModelParams m2{2, 4.0, 0.0};
  CHECK(std::abs(h_star(m2).h - 8.0 / 3.0 * std::log(2.0)) < 1e-10);
}

TEST_CASE("series against polygamma oracle") {
  for (auto [d, p] : {std::pair{1, 3.0}, {1, 4.0}, {2, 4.0}, {1, 5.0}, {3, 6.0}}) {
    const ModelParams m{d, p, 0.0};
    for (double s : {0.0, 0.01, 0.3, 2.0, 17.0}) {
      const auto v = c_series(s, m);
      CHECK(v.value == doctest::Approx(c_oracle(s, m)).epsilon(1e-13));
      CHECK(v.tail_bound <= 1e-14 * std::max(1.0, std::abs(v.value)));
      CHECK(c_series_hurwitz(s, m) == doctest::Approx(v.value).epsilon(1e-12));
    }
  }
}

TEST_CASE("non-integer exponent: hurwitz form agrees with direct series") {
  const ModelParams m{2, 4.7, 0.0};
  for (double s : {0.0, 0.2, 5.0}) CHECK(c_series_hurwitz(s, m) == doctest::Approx(c_series(s, m).value).epsilon(1e-12));
}

TEST_CASE("derivatives against finite differences") {
  const ModelParams m{1, 3.0, 0.03};
  for (double h : {1.0, 2.7, 6.0}) {
    const double e = 1e-4;
    const double fd1 = (e_tau(h + e, m) - e_tau(h - e, m)) / (2 * e);
    const double fd2 = (e_tau(h + e, m) - 2 * e_tau(h, m) + e_tau(h - e, m)) / (e * e);
    CHECK(de_tau(h, m) == doctest::Approx(fd1).epsilon(1e-7));
    CHECK(d2e_tau(h, m) == doctest::Approx(fd2).epsilon(1e-5));
  }
  const ModelParams m2{2, 4.5, 0.05};
  const double h = 2.0, e = 1e-4;
  CHECK(d2e_tau(h, m2) == doctest::Approx((de_tau(h + e, m2) - de_tau(h - e, m2)) / (2 * e)).epsilon(1e-7));
}

TEST_CASE("h_star is a stationary minimum") {
  for (double tau : {0.0, 0.01, 0.05}) {
    const ModelParams m{1, 3.0, tau};
    const auto r = h_star(m);
    CHECK(std::abs(de_tau(r.h, m)) < 1e-12);
    CHECK(d2e_tau(r.h, m) > 0.0);
    CHECK(e_tau(0.98 * r.h, m) > r.energy);
    CHECK(e_tau(1.02 * r.h, m) > r.energy);
  }
}

TEST_CASE("h_box") {
  const ModelParams m{1, 3.0, 0.01};
  const auto hs = h_star(m);
  CHECK(h_box(2.0 * hs.h, m).h == doctest::Approx(hs.h).epsilon(1e-13));
  CHECK(h_box(10.0 * hs.h, m).h == doctest::Approx(hs.h).epsilon(1e-13));
  const double L = 50.0;
  const auto hb = h_box(L, m);
  const double k = L / (2.0 * hb.h);
  CHECK(std::abs(k - std::round(k)) < 1e-9);
  for (int j = 1; j < 40; ++j) CHECK(e_tau(L / (2.0 * j), m) >= hb.energy - 1e-15);
  CHECK_THROWS(h_box(0.0, m));
}

TEST_CASE("convexity window") {
  const ModelParams m{1, 3.0, 0.01};
  const auto hs = h_star(m);
  const auto w = convexity_window(m, 0.05 * std::abs(hs.energy));
  CHECK(w.c1bar < hs.h);
  CHECK(hs.h < w.c2bar);
  CHECK(w.c3bar > 0.0);
  CHECK_THROWS(convexity_window(m, 0.5 * std::abs(hs.energy)));
}

TEST_CASE("errors") {
  CHECK_THROWS(c_series(0.0, ModelParams{1, 3.0, 0.0}, 0.0));
  CHECK_THROWS(e_tau(-1.0, ModelParams{1, 3.0, 0.0}));
  CHECK_THROWS(ModelParams({2, 3.5, 0.0}).validate());
}
