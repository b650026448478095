#include "stripes/stripe1d.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stripes/kernel.hpp"
#include "stripes/special.hpp"

namespace stripes {

namespace {

struct PairedSum {
  double value = 0.0;
  double bound = 0.0;
};

// sum_{k>=0} (2k+1+s)^-a - (2k+2+s)^-a: K terms directly, the rest by
// Euler-Maclaurin. The summand is completely monotone in k, so the error is
// below the first omitted correction.
PairedSum paired_sum(double a, double s, int K) {
  PairedSum out;
  double head = 0.0;
  for (int k = K - 1; k >= 0; --k) head += std::pow(2.0 * k + 1 + s, -a) - std::pow(2.0 * k + 2 + s, -a);
  const double x1 = 2.0 * K + 1 + s;
  const double x2 = 2.0 * K + 2 + s;
  double tail = (a == 1.0) ? 0.5 * std::log(x2 / x1)
                           : (std::pow(x1, 1.0 - a) - std::pow(x2, 1.0 - a)) / (2.0 * (a - 1.0));
  tail += 0.5 * (std::pow(x1, -a) - std::pow(x2, -a));
  // f^{(m)}(K) = coef * 2^m * (x1^{-a-m} - x2^{-a-m}), coef = prod_{i<m} (-a-i)
  double coef = -a;
  double two_m = 2.0;
  double fact = 2.0;
  int m = 1;
  constexpr int J = 6;
  for (int j = 1; j <= J + 1; ++j) {
    const double deriv = coef * two_m * (std::pow(x1, -a - m) - std::pow(x2, -a - m));
    const double term = -kBernoulli2[j - 1] / fact * deriv;
    if (j <= J) {
      tail += term;
    } else {
      out.bound = std::abs(term);
    }
    coef *= (-a - m) * (-a - m - 1);
    two_m *= 4.0;
    fact *= (2.0 * j + 1) * (2.0 * j + 2);
    m += 2;
  }
  out.value = head + tail;
  out.bound += 1e-16 * (std::abs(head) + std::abs(tail));
  return out;
}

void require_h(double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw Error("stripe width h must be positive");
}

}  // namespace

SeriesValue c_series(double s, const ModelParams& m, double tol) {
  if (!(tol > 0.0)) throw Error("c_series: tol must be positive");
  if (!(s >= 0.0)) throw Error("c_series: s must be >= 0");
  const double q = m.q();
  if (q < 3.0) throw Error("c_series: series diverges for q < 3");
  const KernelConstants kc = kernel_constants(m);
  const double pre = 4.0 * kc.c1 * kc.c2;
  const double a = q - 2.0;
  SeriesValue out;
  for (int K = 8;; K *= 2) {
    const PairedSum v = paired_sum(a, s, K);
    const PairedSum v1 = paired_sum(a + 1.0, s, K);
    const PairedSum v2 = paired_sum(a + 2.0, s, K);
    out.value = pre * v.value;
    out.ds = -pre * a * v1.value;
    out.ds2 = pre * a * (a + 1.0) * v2.value;
    out.truncation_k = K;
    out.tail_bound = pre * v.bound;
    if (out.tail_bound <= tol) return out;
    if (K > (1 << 22)) throw Error("c_series: requested tolerance not reachable");
  }
}

double c_series_hurwitz(double s, const ModelParams& m) {
  const KernelConstants kc = kernel_constants(m);
  const double a = m.q() - 2.0;
  return 4.0 * kc.c1 * kc.c2 * std::pow(2.0, -a) *
         (hurwitz_zeta(a, 0.5 * (1.0 + s)) - hurwitz_zeta(a, 0.5 * (2.0 + s)));
}

double e_tau(double h, const ModelParams& m) {
  require_h(h);
  const SeriesValue c = c_series(m.t() / h, m);
  return -1.0 / h + c.value / std::pow(h, m.q() - 1.0);
}

double de_tau(double h, const ModelParams& m) {
  require_h(h);
  const double q = m.q();
  const double s = m.t() / h;
  const SeriesValue c = c_series(s, m);
  return 1.0 / (h * h) - ((q - 1.0) * c.value + s * c.ds) / std::pow(h, q);
}

double d2e_tau(double h, const ModelParams& m) {
  require_h(h);
  const double q = m.q();
  const double s = m.t() / h;
  const SeriesValue c = c_series(s, m);
  return -2.0 / (h * h * h) +
         (q * (q - 1.0) * c.value + 2.0 * q * s * c.ds + s * s * c.ds2) / std::pow(h, q + 1.0);
}

PeriodResult h_star(const ModelParams& m, double tol) {
  m.validate();
  if (!(tol > 0.0)) throw Error("h_star: tol must be positive");
  constexpr int N = 200;
  const double lo = std::log(1e-2), hi = std::log(1e3);
  std::vector<double> hs(N), es(N);
  int best = 0;
  for (int i = 0; i < N; ++i) {
    hs[i] = std::exp(lo + (hi - lo) * i / (N - 1));
    es[i] = e_tau(hs[i], m);
    if (es[i] < es[best]) best = i;
  }
  if (best == 0 || best == N - 1) throw Error("h_star: no interior minimum located");
  double a = hs[best - 1], b = hs[best + 1];
  if (!(de_tau(a, m) < 0.0 && de_tau(b, m) > 0.0)) throw Error("h_star: no interior minimum located");
  double x = hs[best];
  for (int it = 0; it < 200; ++it) {
    const double g = de_tau(x, m);
    if (std::abs(g) <= tol) break;
    if (g < 0.0) a = x; else b = x;
    if (b - a < 4e-16 * x) break;
    const double h2 = d2e_tau(x, m);
    double xn = h2 > 0.0 ? x - g / h2 : 0.5 * (a + b);
    if (!(xn > a && xn < b)) xn = 0.5 * (a + b);
    x = xn;
  }
  if (std::abs(de_tau(x, m)) > tol) throw Error("h_star: refinement did not reach tolerance");
  return {x, e_tau(x, m), {x}};
}

PeriodResult h_box(double L, const ModelParams& m, double tol) {
  m.validate();
  if (!(L > 0.0)) throw Error("h_box: period must be positive");
  const long kmax = std::max(1L, static_cast<long>(std::ceil(L / (2.0 * 1e-2))));
  std::vector<double> es(kmax);
  long best = 0;
  for (long k = 1; k <= kmax; ++k) {
    es[k - 1] = e_tau(L / (2.0 * k), m);
    if (es[k - 1] < es[best]) best = k - 1;
  }
  PeriodResult r;
  r.h = L / (2.0 * (best + 1));
  r.energy = es[best];
  for (long k = 1; k <= kmax; ++k)
    if (es[k - 1] <= es[best] + tol) r.multiplicity.push_back(L / (2.0 * k));
  return r;
}

PeriodResult h_interval(double len, const ModelParams& m, double tol) { return h_box(len, m, tol); }

ConvexityWindow convexity_window(const ModelParams& m, double eps) {
  if (!(eps > 0.0)) throw Error("convexity_window: eps must be positive");
  const ModelParams m0 = with_tau(m, 0.0);
  const PeriodResult p0 = h_star(m0);
  const double level = p0.energy + eps;
  if (level >= 0.0) throw Error("convexity_window: eps too large, window unbounded");
  auto above = [&](double h) { return e_tau(h, m) > level; };
  double anchor = p0.h;
  if (above(anchor)) {
    anchor = h_star(m).h;
    if (above(anchor)) throw Error("convexity_window: window empty near h = " + std::to_string(anchor));
  }
  auto edge = [&](double factor) {
    double in = anchor, out = anchor * factor;
    while (!above(out)) {
      in = out;
      out *= factor;
      if (out < 1e-6 || out > 1e8) throw Error("convexity_window: window unbounded");
    }
    for (int it = 0; it < 200 && std::abs(out - in) > 1e-15 * anchor; ++it) {
      const double mid = 0.5 * (in + out);
      if (above(mid)) out = mid; else in = mid;
    }
    return in;
  };
  ConvexityWindow w;
  w.c1bar = edge(0.5);
  w.c2bar = edge(2.0);
  w.c3bar = INFINITY;
  constexpr int G = 2001;
  for (int i = 0; i < G; ++i) {
    const double h = w.c1bar + (w.c2bar - w.c1bar) * i / (G - 1);
    const double v = d2e_tau(h, m);
    if (!(v > 0.0)) throw Error("convexity_window: second derivative not positive at h = " + std::to_string(h));
    w.c3bar = std::min(w.c3bar, v);
  }
  return w;
}

}  // namespace stripes
