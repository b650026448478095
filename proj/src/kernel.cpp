#include "stripes/kernel.hpp"

#include <cmath>

#include "stripes/special.hpp"

namespace stripes {

double k1(std::span<const double> zeta, double p) {
  double n1 = 0.0;
  for (double z : zeta) n1 += std::abs(z);
  return std::pow(n1 + 1.0, -p);
}

double k_tau(std::span<const double> zeta, const ModelParams& m) {
  if (!(m.tau > 0.0)) throw Error("k_tau requires tau > 0");
  const double t = m.t();
  double n1 = 0.0;
  for (double z : zeta) n1 += std::abs(z);
  return std::pow(m.tau, -m.p / m.beta()) * std::pow(n1 / t + 1.0, -m.p);
}

KernelConstants kernel_constants(const ModelParams& m) {
  m.validate();
  KernelConstants k;
  const double q = m.q();
  k.c1 = std::exp((m.d - 1) * std::log(2.0) + std::lgamma(m.p - m.d + 1.0) - std::lgamma(m.p));
  k.c2 = 1.0 / ((q - 1.0) * (q - 2.0));
  k.jc_analogue = 2.0 * k.c1 * k.c2;
  k.m1 = m.tau > 0.0 ? k.jc_analogue / m.tau : INFINITY;
  return k;
}

double khat1(double rho, const ModelParams& m) {
  return kernel_constants(m).c1 * std::pow(std::abs(rho) + 1.0, -m.q());
}

double khat_tau(double rho, const ModelParams& m) {
  if (!(m.tau > 0.0)) throw Error("khat_tau requires tau > 0");
  const double t = m.t();
  return std::pow(m.tau, -m.q() / m.beta()) * khat1(rho / t, m);
}

double kernel_mass(const ModelParams& m) {
  if (!(m.tau > 0.0)) throw Error("kernel_mass requires tau > 0");
  const double t = m.t();
  return std::exp(m.d * std::log(2.0) + std::lgamma(m.p - m.d) - std::lgamma(m.p) +
                  (m.d - m.p) * std::log(t));
}

double khat_primitive2(double x, const ModelParams& m) {
  const KernelConstants k = kernel_constants(m);
  return k.c1 * k.c2 * std::pow(x + m.t(), 2.0 - m.q());
}

double khat_primitive2_periodic(double x, double L, const ModelParams& m) {
  const KernelConstants k = kernel_constants(m);
  const double q = m.q();
  return k.c1 * k.c2 * std::pow(L, 2.0 - q) * hurwitz_zeta(q - 2.0, (x + m.t()) / L);
}

}  // namespace stripes
