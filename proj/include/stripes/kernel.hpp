#pragma once

#include <span>

#include "stripes/params.hpp"

namespace stripes {

struct KernelConstants {
  double c1 = 0.0;  // Fourier-type constant of the 1d marginal
  double c2 = 0.0;  // 1 / ((q-1)(q-2))
  double m1 = 0.0;  // first absolute moment of the 1d marginal, 2 c1 c2 / tau
  double jc_analogue = 0.0;  // m1 at tau = 1
};

// Unregularized unit kernel (||zeta||_1 + 1)^-p.
double k1(std::span<const double> zeta, double p);

// tau^(-p/beta) k1(zeta tau^(-1/beta)); needs tau > 0.
double k_tau(std::span<const double> zeta, const ModelParams& m);

// Marginal of k1 over the d-1 transverse coordinates, c1 (|rho| + 1)^-q.
double khat1(double rho, const ModelParams& m);
double khat_tau(double rho, const ModelParams& m);

KernelConstants kernel_constants(const ModelParams& m);

// Integral of K_tau over R^d.
double kernel_mass(const ModelParams& m);

// Second antiderivative of khat_tau on [0, inf) that vanishes at infinity:
// c1 c2 (x + t)^(2-q).
double khat_primitive2(double x, const ModelParams& m);

// sum_{k>=0} khat_primitive2(x + k L). For q == 3 this sum diverges and a
// fixed constant is dropped; only combinations whose coefficients add up to
// zero are meaningful then.
double khat_primitive2_periodic(double x, double L, const ModelParams& m);

}  // namespace stripes
