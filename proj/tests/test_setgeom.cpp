#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "stripes/setgeom.hpp"
#include "stripes/setio.hpp"

using namespace stripes;

namespace {

PeriodicSet random_grid(int d, int n, double L, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::uint8_t> c(static_cast<size_t>(ipow(n, d)));
  for (auto& v : c) v = rng() % 2;
  return PeriodicSet::from_grid(d, L, n, c);
}

}  // namespace

TEST_CASE("stripes: volume, perimeter, slices") {
  const auto E = make_stripes(0, 1.5, 0.0, 6.0, 2);
  CHECK(E.volume() == doctest::Approx(18.0));
  CHECK(per1i(E, 0) == doctest::Approx(4 * 6.0));
  CHECK(per1i(E, 1) == doctest::Approx(0.0));
  CHECK(per1(E) == doctest::Approx(24.0));
  const std::vector<double> y{2.2};
  const auto s = slice(E, 0, y);
  REQUIRE(s.boundaries.size() == 4);
  CHECK(s.boundaries[1] == doctest::Approx(1.5));
  CHECK(s.starts_inside);
  const auto nb = neighbors(s, 1.5);
  CHECK(nb.first == doctest::Approx(0.0));
  CHECK(nb.second == doctest::Approx(3.0));
  const auto nb0 = neighbors(s, 0.0);
  CHECK(nb0.first == doctest::Approx(-1.5));
  CHECK_THROWS(make_stripes(0, 1.4, 0.0, 6.0, 2));
}

TEST_CASE("empty and full sets") {
  const auto E = PeriodicSet::from_boxes(2, 3.0, {});
  CHECK(E.volume() == 0.0);
  CHECK(per1(E) == 0.0);
  const auto F = complement(E);
  CHECK(F.volume() == doctest::Approx(9.0));
  CHECK(per1(F) == 0.0);
}

TEST_CASE("complement keeps the perimeter and fills the volume") {
  const auto E = PeriodicSet::from_boxes(2, 4.0, {Box{{0.5, 1.0}, {2.0, 3.5}}, Box{{3.0, 3.0}, {4.5, 4.2}}});
  const auto C = complement(E);
  CHECK(E.volume() + C.volume() == doctest::Approx(16.0));
  CHECK(per1(C) == doctest::Approx(per1(E)));
  for (double x : {0.1, 0.7, 1.9, 3.2, 3.9})
    for (double y : {0.1, 1.5, 3.1, 3.9}) {
      const std::vector<double> p{x, y};
      CHECK(E.contains(p) != C.contains(p));
    }
}

TEST_CASE("rasterization of a grid-aligned box set is exact") {
  const auto E = PeriodicSet::from_boxes(2, 4.0, {Box{{0.5, 1.0}, {2.0, 3.5}}});
  const auto G = rasterize(E, 16);
  CHECK(G.volume() == doctest::Approx(E.volume()));
  CHECK(per1(G) == doctest::Approx(per1(E)));
}

TEST_CASE("grid perimeter counts faces") {
  std::vector<std::uint8_t> c(16, 0);
  c[5] = 1;  // single cell (1,1) in a 4x4 grid
  const auto G = PeriodicSet::from_grid(2, 4.0, 4, c);
  CHECK(per1(G) == doctest::Approx(4.0));
  CHECK(per1i(G, 0) == doctest::Approx(2.0));
}

TEST_CASE("translation and permutation invariants") {
  const auto G = random_grid(3, 6, 3.0, 7);
  const std::vector<double> sh{0.5, 1.0, 2.5};
  const auto T = translate(G, sh);
  CHECK(T.volume() == doctest::Approx(G.volume()));
  CHECK(per1(T) == doctest::Approx(per1(G)));
  const std::vector<int> perm{2, 0, 1};
  const auto P = permute_axes(G, perm);
  for (int j = 0; j < 3; ++j) CHECK(per1i(P, j) == doctest::Approx(per1i(G, perm[j])));
  const auto B = PeriodicSet::from_boxes(2, 5.0, {Box{{4.0, 1.0}, {6.0, 2.0}}});
  const std::vector<double> s2{1.5, -0.5};
  const auto TB = translate(B, s2);
  const std::vector<double> in{1.0, 0.7}, out{0.2, 0.7};
  CHECK(TB.contains(in));
  CHECK(!TB.contains(out));
}

TEST_CASE("text round trip is bit exact") {
  const auto E = PeriodicSet::from_boxes(2, 4.0 / 3.0, {Box{{0.1, 1.0 / 7.0}, {0.9, 1.3}}});
  std::stringstream ss;
  write_set(ss, E);
  const auto F = read_set(ss);
  REQUIRE(F.boxes().size() == 1);
  CHECK(F.period() == E.period());
  for (int j = 0; j < 2; ++j) {
    CHECK(F.boxes()[0].lo[j] == E.boxes()[0].lo[j]);
    CHECK(F.boxes()[0].hi[j] == E.boxes()[0].hi[j]);
  }
  const auto G = random_grid(2, 12, 3.0, 3);
  std::stringstream sg;
  write_set(sg, G);
  CHECK(read_set(sg).cells() == G.cells());
}

TEST_CASE("invalid input") {
  CHECK_THROWS(PeriodicSet::from_boxes(2, 4.0, {Box{{0.0, 0.0}, {2.0, 2.0}}, Box{{1.0, 1.0}, {3.0, 3.0}}}));
  CHECK_THROWS(PeriodicSet::from_boxes(2, 4.0, {Box{{0.0, 0.0}, {5.0, 2.0}}}));
  CHECK_THROWS(PeriodicSet::from_grid(2, 1.0, 3, std::vector<std::uint8_t>(9)));
  std::stringstream bad("2 4.0 boxes\n0 1 0\n");
  CHECK_THROWS_AS(read_set(bad), Error);
}
