#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace stripes {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ModelParams {
  int d = 1;
  double p = 3.0;
  double tau = 0.0;

  double beta() const { return p - d - 1.0; }
  double q() const { return p - d + 1.0; }
  // length scale of the regularized kernel, tau^(1/beta)
  double t() const { return tau > 0.0 ? std::pow(tau, 1.0 / beta()) : 0.0; }

  void validate() const {
    if (d < 1) throw Error("dimension must be at least 1");
    if (!(p >= d + 2.0)) throw Error("exponent p must satisfy p >= d + 2");
    if (!(tau >= 0.0) || !std::isfinite(tau)) throw Error("tau must be finite and >= 0");
  }
};

inline ModelParams with_tau(ModelParams m, double tau) {
  m.tau = tau;
  return m;
}

}  // namespace stripes
