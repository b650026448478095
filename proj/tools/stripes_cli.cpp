// stripes: period tables, energies, verification suites, cube labels.
#include <omp.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "stripes/functional.hpp"
#include "stripes/params.hpp"
#include "stripes/report_json.hpp"
#include "stripes/setgeom.hpp"
#include "stripes/setio.hpp"
#include "stripes/stripe1d.hpp"
#include "stripes/stripedist.hpp"
#include "stripes/verify.hpp"

using namespace stripes;
using json = nlohmann::json;

namespace {

struct Options {
  int dim = 1;
  double p = 3.0;
  double tau = 0.01;
  int grid_n = 64;
  double tol = 1e-9;
  double eta = 1.0;
  double delta = 0.1;
  double cube_l = 4.0;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "csv";
  std::vector<double> box;
  std::vector<double> taus{0.0, 0.005, 0.01, 0.02, 0.05};
  std::string suite = "all";
  std::string set_file;
  std::string pattern = "stripes";
  double width = 1.0;
  int cells = 0;
};

ModelParams params(const Options& o) {
  ModelParams m{o.dim, o.p, o.tau};
  m.validate();
  return m;
}

QuadratureSpec quad(const Options& o) {
  QuadratureSpec q;
  q.grid_n = o.grid_n;
  q.tol = o.tol;
  return q;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw Error("cannot write " + o.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

int cmd_period_table(const Options& o) {
  const ModelParams base = params(o);
  std::vector<double> Ls = o.box;
  if (Ls.empty()) Ls = {20, 40, 80, 160, 320};
  std::ostringstream csv;
  json rows = json::array();
  csv << "tau,L,h_star,h_box,e_star,e_box,drift_L,h_tol,series_bound,error\n";
  for (double tau : o.taus) {
    const ModelParams m = with_tau(base, tau);
    for (double L : Ls) {
      std::string err;
      PeriodResult hs, hb;
      double bound = NAN;
      try {
        hs = h_star(m, o.tol);
        hb = h_box(L, m, o.tol);
        bound = c_series(m.t() / hb.h, m).tail_bound / std::pow(hb.h, m.q() - 1.0);
      } catch (const std::exception& e) {
        err = e.what();
      }
      const double drift = std::abs(hb.h - hs.h) * L;
      csv << fmt17(tau) << ',' << fmt17(L) << ',' << fmt17(hs.h) << ',' << fmt17(hb.h) << ',' << fmt17(hs.energy)
          << ',' << fmt17(hb.energy) << ',' << fmt17(drift) << ',' << fmt17(o.tol) << ',' << fmt17(bound) << ','
          << '"' << err << "\"\n";
      rows.push_back({{"tau", tau}, {"L", L}, {"h_star", hs.h}, {"h_box", hb.h}, {"e_star", hs.energy},
                      {"e_box", hb.energy}, {"drift_L", drift}, {"h_tol", o.tol}, {"series_bound", bound},
                      {"error", err}});
    }
  }
  emit(o, o.format == "json" ? rows.dump(2) : csv.str());
  return 0;
}

int cmd_energy(const Options& o) {
  const ModelParams m = params(o);
  if (m.tau <= 0.0) throw Error("energy needs tau > 0");
  const PeriodicSet E = load_set(o.set_file);
  const auto a = direct_energy(E, m, quad(o));
  const auto b = decomposed_energy(E, m, quad(o));
  if (o.format == "json") {
    json j{{"direct", json::parse(to_json(a, m))},
           {"decomposed", json::parse(to_json(b, m))},
           {"gap", a.total - b.total},
           {"gap_bound", a.error_bound + b.error_bound}};
    emit(o, j.dump(2));
  } else {
    std::string s = to_csv(a);
    s += to_csv(b).substr(to_csv(b).find('\n') + 1);
    s += "# gap," + fmt17(a.total - b.total) + "\n";
    emit(o, s);
  }
  return 0;
}

int cmd_verify(const Options& o) {
  const auto res = run_suite(o.suite, params(o), o.seed);
  emit(o, o.format == "json" ? to_json(res) : to_csv(res));
  for (const auto& c : res)
    if (!c.passed) return 1;
  return 0;
}

int cmd_classify(const Options& o) {
  const PeriodicSet E = load_set(o.set_file);
  ClassifyOptions co;
  co.l = o.cube_l;
  co.eta = o.eta;
  co.delta = o.delta;
  co.resolution = std::max(4, static_cast<int>(std::ceil(4.0 * o.cube_l / o.eta)));
  const CubeField f = classify_cubes(E, co);
  std::ostringstream s;
  if (o.format == "json") {
    json j{{"m", f.m}, {"rho", f.rho}, {"label", f.label}, {"dist", f.dist}, {"component", f.component}};
    s << j.dump(2);
  } else {
    f.write_csv(s);
  }
  emit(o, s.str());
  return 0;
}

int cmd_compare(const Options& o) {
  ModelParams m = params(o);
  if (m.d != 2) throw Error("compare runs in d = 2");
  const auto c = compare_patterns(m, o.grid_n % 96 == 0 ? o.grid_n : 96);
  emit(o, o.format == "json" ? to_json(c) : to_csv(c));
  return c.outcome.passed ? 0 : 1;
}

// which checks pass over a tau grid; an observed region, nothing more
int cmd_region(const Options& o) {
  const ModelParams base = params(o);
  std::ostringstream csv;
  json rows = json::array();
  csv << "tau,check,passed,margin\n";
  for (double tau : o.taus) {
    if (tau <= 0.0) continue;
    for (const auto& c : run_suite(o.suite, with_tau(base, tau), o.seed)) {
      csv << fmt17(tau) << ',' << c.name << ',' << (c.passed ? 1 : 0) << ',' << fmt17(c.margin) << '\n';
      rows.push_back({{"tau", tau}, {"check", c.name}, {"passed", c.passed}, {"margin", c.margin}});
    }
  }
  emit(o, o.format == "json" ? rows.dump(2) : csv.str());
  return 0;
}

int cmd_make_set(const Options& o) {
  const double h = o.width;
  const double L = o.box.empty() ? 4.0 * h : o.box.front();
  PeriodicSet E = PeriodicSet::from_boxes(o.dim, L, {});
  if (o.pattern == "stripes") {
    E = make_stripes(0, h, 0.0, L, o.dim);
  } else if (o.pattern == "checkerboard") {
    const int n = o.cells > 0 ? o.cells : static_cast<int>(std::lround(L / h)) * 2;
    std::vector<std::uint8_t> cells(static_cast<size_t>(ipow(n, o.dim)));
    const int c = std::max(1, static_cast<int>(std::lround(h / (L / n))));
    for (size_t k = 0; k < cells.size(); ++k) {
      std::vector<int> x(o.dim);
      lattice_coords(static_cast<long>(k), n, x);
      int s = 0;
      for (int v : x) s += v / c;
      cells[k] = s % 2 == 0;
    }
    E = PeriodicSet::from_grid(o.dim, L, n, std::move(cells));
  } else if (o.pattern != "empty") {
    throw Error("unknown pattern " + o.pattern);
  }
  std::ostringstream s;
  write_set(s, E);
  emit(o, s.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("STRIPE_THREADS")) {
    const int k = std::atoi(env);
    if (k > 0) omp_set_num_threads(std::min(k, omp_get_max_threads()));
  }
  Options o;
  CLI::App app{"periodic stripe patterns for nonlocal perimeter functionals"};
  app.set_config("--config", "", "key = value file; flags override it");
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.fallthrough();
  app.add_option("--dim", o.dim, "dimension d")->check(CLI::Range(1, 3));
  app.add_option("--p", o.p, "kernel exponent, p >= d + 2");
  app.add_option("--tau", o.tau, "kernel regularization tau");
  app.add_option("--tol", o.tol, "solver / quadrature tolerance");
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--out", o.out, "output file (stdout if empty)");
  app.add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--grid-n", o.grid_n, "raster cells per axis");
  app.add_option("--taus", o.taus, "tau values for period-table");
  app.add_option("--box", o.box, "box sides L (period-table), or the box side for make-set");
  app.add_option("--cube-l", o.cube_l, "cube side l for classify");
  app.add_option("--eta", o.eta, "minimal interior run length for classify");
  app.add_option("--delta", o.delta, "distance threshold for classify");
  app.add_option("--pattern", o.pattern, "make-set: stripes, checkerboard or empty");
  app.add_option("--width", o.width, "make-set: stripe width or checker side");
  app.add_option("--cells", o.cells, "make-set: grid cells per axis for checkerboards");
  auto* pt = app.add_subcommand("period-table", "h_star, h_box and energies over tau and L");
  auto* en = app.add_subcommand("energy", "direct and decomposed energy of a set file");
  en->add_option("set", o.set_file, "set file")->required()->check(CLI::ExistingFile);
  auto* ve = app.add_subcommand("verify", "run a verification suite; exit 1 on failure");
  ve->add_option("suite", o.suite, "suite name");
  auto* cl = app.add_subcommand("classify", "label cubes by stripe distance");
  cl->add_option("set", o.set_file, "set file")->required()->check(CLI::ExistingFile);
  auto* co = app.add_subcommand("compare", "rank d = 2 patterns by energy");
  auto* rg = app.add_subcommand("region", "run a suite for every tau in --taus and tabulate pass/fail");
  rg->add_option("suite", o.suite, "suite name");
  auto* mk = app.add_subcommand("make-set", "write a stripes, checkerboard or empty set file");
  for (auto* sub : {pt, en, ve, cl, co, rg, mk}) sub->fallthrough();
  CLI11_PARSE(app, argc, argv);
  try {
    if (*pt) return cmd_period_table(o);
    if (*en) return cmd_energy(o);
    if (*ve) return cmd_verify(o);
    if (*cl) return cmd_classify(o);
    if (*co) return cmd_compare(o);
    if (*rg) return cmd_region(o);
    if (*mk) return cmd_make_set(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
