#include "stripes/setio.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace stripes {

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void write_set(std::ostream& os, const PeriodicSet& E) {
  os << E.dim() << ' ' << fmt17(E.period());
  if (E.is_grid()) {
    os << " grid " << E.grid_n() << '\n';
    const auto& c = E.cells();
    int on_line = 0;
    for (size_t i = 0; i < c.size();) {
      size_t j = i;
      while (j < c.size() && c[j] == c[i]) ++j;
      os << (j - i) << '*' << int(c[i]);
      i = j;
      if (++on_line == 16 || i == c.size()) {
        os << '\n';
        on_line = 0;
      } else {
        os << ' ';
      }
    }
    return;
  }
  os << " boxes\n";
  for (const auto& b : E.boxes()) {
    for (int j = 0; j < E.dim(); ++j) os << (j ? " " : "") << fmt17(b.lo[j]) << ' ' << fmt17(b.hi[j]);
    os << '\n';
  }
}

PeriodicSet read_set(std::istream& is) {
  std::string line;
  do {
    if (!std::getline(is, line)) throw Error("set file: missing header");
  } while (line.find_first_not_of(" \t\r") == std::string::npos);
  std::istringstream hs(line);
  int d = 0;
  double L = 0.0;
  std::string repr;
  if (!(hs >> d >> L >> repr)) throw Error("set file: malformed header");
  if (repr == "grid") {
    int n = 0;
    if (!(hs >> n)) throw Error("set file: grid header needs n");
    if (d < 1 || n < 4) throw Error("set file: bad grid dimensions");
    std::vector<std::uint8_t> cells;
    const long total = ipow(n, d);
    std::string tok;
    while (is >> tok) {
      const auto star = tok.find('*');
      if (star == std::string::npos) throw Error("set file: bad run token '" + tok + "'");
      const long cnt = std::stol(tok.substr(0, star));
      const int bit = std::stoi(tok.substr(star + 1));
      if (cnt <= 0 || (bit != 0 && bit != 1)) throw Error("set file: bad run token '" + tok + "'");
      if (static_cast<long>(cells.size()) + cnt > total) throw Error("set file: too many cells");
      cells.insert(cells.end(), cnt, static_cast<std::uint8_t>(bit));
    }
    return PeriodicSet::from_grid(d, L, n, std::move(cells));
  }
  if (repr != "boxes") throw Error("set file: unknown representation '" + repr + "'");
  std::vector<Box> boxes;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    Box b;
    b.lo.resize(d);
    b.hi.resize(d);
    for (int j = 0; j < d; ++j)
      if (!(ls >> b.lo[j] >> b.hi[j])) throw Error("set file: malformed box row");
    boxes.push_back(std::move(b));
  }
  return PeriodicSet::from_boxes(d, L, std::move(boxes));
}

void save_set(const std::string& path, const PeriodicSet& E) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  write_set(f, E);
}

PeriodicSet load_set(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot read " + path);
  return read_set(f);
}

}  // namespace stripes
