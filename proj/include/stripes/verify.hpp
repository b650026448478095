#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stripes/functional.hpp"
#include "stripes/params.hpp"

namespace stripes {

struct CheckOutcome {
  std::string name;
  bool passed = false;
  double margin = 0.0;  // slack of the checked inequality at the worst sample
  long samples = 0;
  std::string witness;  // JSON: worst instance plus fitted constants
};

struct StripeCase {
  int d = 1;
  double h = 1.0;
  double L = 2.0;
};

CheckOutcome check_stripe_equality(const ModelParams& m, const std::vector<StripeCase>& cases, double rel_tol);

// largest gap g such that every probed boundary point with a neighbour gap
// below g has r > 0 (empirical)
double estimate_eta0(const ModelParams& m);

CheckOutcome check_penalization_bound(const ModelParams& m, int profiles, std::uint64_t seed);

struct Profile1d {
  double period = 0.0;
  std::vector<double> boundaries;
};

// sum of r over boundary points in [lo, hi)
double sum_r_on_interval(const Profile1d& prof, double lo, double hi, const ModelParams& m);

CheckOutcome check_1d_optimization(const ModelParams& m, const std::vector<double>& length_factors,
                                   int ensemble_size, std::uint64_t seed);

CheckOutcome check_convexity_and_window(const ModelParams& m, const std::vector<double>& taus,
                                        const std::vector<double>& Ls, double eps);

CheckOutcome check_kernel_difference_bounds(const ModelParams& m, const std::vector<double>& taus);

CheckOutcome check_stripe_distance(int instances, int probes, std::uint64_t seed);

struct PatternRow {
  std::string name;
  double total = 0.0;
  double error_bound = 0.0;
  double band = 0.0;
};

struct PatternComparison {
  std::vector<PatternRow> rows;  // sorted by energy
  CheckOutcome outcome;
};

// d = 2 pattern suite on an n x n grid with L = 16 h_star (stripes of width
// n/16 cells); n must be a multiple of 96's divisors used by the suite.
PatternComparison compare_patterns(const ModelParams& m, int n);

struct RigidityRow {
  std::string family;
  double tau = 0.0;
  double max_fbar = 0.0;
  double max_d_eta_bounded = 0.0;  // over cubes with local energy <= M
  long bounded_cubes = 0;
};

std::vector<RigidityRow> rigidity_probe(const ModelParams& m, const std::vector<double>& taus, double M, double l);

std::vector<std::string> verify_suites();
std::vector<CheckOutcome> run_suite(const std::string& name, const ModelParams& m, std::uint64_t seed);

}  // namespace stripes
