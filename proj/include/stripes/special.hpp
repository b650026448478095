#pragma once

#include <vector>

namespace stripes {

// Hurwitz zeta sum_{k>=0} (k+a)^-s for real s > 1, a > 0. At s == 1 the
// divergent part is dropped and -digamma(a) is returned, which is the
// constant that makes differences of shifted sums come out right.
double hurwitz_zeta(double s, double a);

double digamma(double a);

struct GaussRule {
  std::vector<double> x;  // nodes on [-1, 1]
  std::vector<double> w;
};

// Gauss-Legendre rule with n points, n in [1, 64]; cached.
const GaussRule& gauss_legendre(int n);

// Bernoulli numbers B_2, B_4, ..., B_24 (index j -> B_{2j+2}).
extern const double kBernoulli2[12];

}  // namespace stripes
