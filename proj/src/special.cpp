#include "stripes/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "stripes/params.hpp"

namespace stripes {

const double kBernoulli2[12] = {
    1.0 / 6.0,         -1.0 / 30.0,          1.0 / 42.0,       -1.0 / 30.0,
    5.0 / 66.0,        -691.0 / 2730.0,      7.0 / 6.0,        -3617.0 / 510.0,
    43867.0 / 798.0,   -174611.0 / 330.0,    854513.0 / 138.0, -236364091.0 / 2730.0};

double hurwitz_zeta(double s, double a) {
  if (!(a > 0.0)) throw Error("hurwitz_zeta: a must be positive");
  if (!(s >= 1.0)) throw Error("hurwitz_zeta: s must be >= 1");
  const double xmin = std::max(12.0, s);
  int shift = 0;
  if (a < xmin) shift = static_cast<int>(std::ceil(xmin - a));
  double head = 0.0;
  for (int k = shift - 1; k >= 0; --k) head += std::pow(k + a, -s);
  const double x = a + shift;
  double tail = (s == 1.0) ? -std::log(x) : std::pow(x, 1.0 - s) / (s - 1.0);
  const double xs = std::pow(x, -s);
  tail += 0.5 * xs;
  // Euler-Maclaurin corrections
  double poch = s;           // (s)_{2j-1}
  double fact = 2.0;         // (2j)!
  double xp = xs / x;        // x^{-s-2j+1}
  for (int j = 1; j <= 12; ++j) {
    const double term = kBernoulli2[j - 1] / fact * poch * xp;
    tail += term;
    if (std::abs(term) < 1e-18 * std::abs(head + tail)) break;
    poch *= (s + 2 * j - 1) * (s + 2 * j);
    fact *= (2 * j + 1) * (2 * j + 2);
    xp /= x * x;
  }
  return head + tail;
}

double digamma(double a) { return -hurwitz_zeta(1.0, a); }

namespace {

GaussRule build_rule(int n) {
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.x[i] = -x;
    r.x[n - 1 - i] = x;
    r.w[i] = w;
    r.w[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.x[n / 2] = 0.0;
  return r;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  static const std::array<GaussRule, 65> rules = [] {
    std::array<GaussRule, 65> out;
    for (int k = 1; k <= 64; ++k) out[k] = build_rule(k);
    return out;
  }();
  if (n < 1 || n > 64) throw Error("gauss_legendre: order out of range");
  return rules[n];
}

}  // namespace stripes
