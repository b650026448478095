#include <doctest.h>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/polygamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <cmath>

#include "stripes/special.hpp"

using namespace stripes;

TEST_CASE("hurwitz zeta at a = 1 is the Riemann zeta") {
  for (double s : {1.5, 2.0, 3.0, 4.5, 7.0}) {
    const double ref = boost::math::zeta(s);
    CHECK(hurwitz_zeta(s, 1.0) == doctest::Approx(ref).epsilon(1e-14));
  }
}

TEST_CASE("hurwitz zeta at integer s matches polygamma") {
  for (int n : {1, 2, 3, 5})
    for (double a : {0.01, 0.3, 1.7, 12.5, 400.0}) {
      const double ref = std::pow(-1.0, n + 1) * boost::math::polygamma(n, a) / boost::math::factorial<double>(n);
      CHECK(hurwitz_zeta(n + 1.0, a) == doctest::Approx(ref).epsilon(1e-13));
    }
}

TEST_CASE("hurwitz zeta at half-integer shift") {
  // zeta(s, 1/2) = (2^s - 1) zeta(s)
  for (double s : {2.0, 2.5, 3.0}) {
    CHECK(hurwitz_zeta(s, 0.5) == doctest::Approx((std::pow(2.0, s) - 1.0) * boost::math::zeta(s)).epsilon(1e-14));
  }
}

TEST_CASE("regularized value at s = 1 is minus digamma") {
  for (double a : {0.2, 1.0, 3.3, 50.0}) {
    CHECK(hurwitz_zeta(1.0, a) == doctest::Approx(-boost::math::digamma(a)).epsilon(1e-13));
    CHECK(digamma(a) == doctest::Approx(boost::math::digamma(a)).epsilon(1e-13));
  }
}

TEST_CASE("gauss legendre integrates polynomials exactly") {
  for (int n : {1, 2, 5, 16, 40, 64}) {
    const auto& g = gauss_legendre(n);
    REQUIRE(g.x.size() == static_cast<size_t>(n));
    for (int k = 0; k <= 2 * n - 1; k += 1) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += g.w[j] * std::pow(g.x[j], k);
      const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
      CHECK(s == doctest::Approx(exact).epsilon(1e-13).scale(1.0));
    }
  }
  CHECK_THROWS(gauss_legendre(0));
  CHECK_THROWS(gauss_legendre(65));
}
