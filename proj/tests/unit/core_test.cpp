#include <cmath>
#include <vector>

#include "doctest.h"
#include "sgn/core.hpp"

using namespace sgn;

TEST_CASE("make_grid places cell centres uniformly, ghosts included") {
  const Grid1D g = make_grid(-1.0, 1.0, 4);
  CHECK(g.dx == doctest::Approx(0.5));
  CHECK(g.size() == 8);
  CHECK(g.begin() == 2);
  CHECK(g.end() == 6);
  CHECK(g.center(0) == doctest::Approx(-0.75));
  CHECK(g.center(3) == doctest::Approx(0.75));
  CHECK(g.cell_centers.front() == doctest::Approx(-1.75));
  CHECK(g.nearest_cell(0.1) == 4);
  CHECK(g.nearest_cell(-100.0) == g.begin());
  CHECK(g.nearest_cell(100.0) == g.end() - 1);
}

TEST_CASE("make_grid rejects bad extents") {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ZeroNorm;
  };
  CHECK(code_of([] { make_grid(1.0, 0.0, 4); }) == ErrorCode::InvalidExtent);
  CHECK(code_of([] { make_grid(0.0, 1.0, 0); }) == ErrorCode::InvalidExtent);
  CHECK(code_of([] { make_grid(0.0, 1.0, 4, 1); }) == ErrorCode::InvalidExtent);
}

TEST_CASE("ghost fill for each boundary policy") {
  const Grid1D g = make_grid(0.0, 4.0, 4);
  const std::vector<double> interior{1.0, 2.0, 3.0, 4.0};
  auto filled = [&](Boundary b, double parity) {
    std::vector<double> v(g.size(), 0.0);
    for (std::size_t k = 0; k < 4; ++k) v[g.begin() + k] = interior[k];
    apply_boundary(std::span<double>(v), g, b, parity);
    return v;
  };
  CHECK(filled(Boundary::Transmissive, 1.0) == std::vector<double>{1, 1, 1, 2, 3, 4, 4, 4});
  CHECK(filled(Boundary::Periodic, 1.0) == std::vector<double>{3, 4, 1, 2, 3, 4, 1, 2});
  CHECK(filled(Boundary::Reflective, 1.0) == std::vector<double>{2, 1, 1, 2, 3, 4, 4, 3});
  CHECK(filled(Boundary::Reflective, -1.0) == std::vector<double>{-2, -1, 1, 2, 3, 4, -4, -3});
}

TEST_CASE("reflective walls flip q only; h w ~ -h^2 u_x is even") {
  const Grid1D g = make_grid(0.0, 4.0, 4);
  HsgnState s(g.size());
  for (std::size_t i = g.begin(); i < g.end(); ++i) {
    s.h[i] = 1.0;
    s.q[i] = 0.5;
    s.heta[i] = 2.0;
    s.hw[i] = 0.25;
  }
  apply_boundary(s, g, Boundary::Reflective);
  CHECK(s.h[1] == 1.0);
  CHECK(s.heta[1] == 2.0);
  CHECK(s.q[1] == -0.5);
  CHECK(s.hw[1] == 0.25);
}

TEST_CASE("mass sums interior cells only") {
  const Grid1D g = make_grid(0.0, 2.0, 4);
  std::vector<double> h(g.size(), 100.0);
  for (std::size_t i = g.begin(); i < g.end(); ++i) h[i] = 1.5;
  CHECK(total_mass(h, g) == doctest::Approx(3.0));
}

TEST_CASE("check_wet and check_finite name the failure") {
  const Grid1D g = make_grid(0.0, 1.0, 4);
  std::vector<double> h(g.size(), 1.0);
  h[g.begin() + 1] = 0.0;
  CHECK_THROWS_AS(check_wet(h, g, 1e-8, "test"), Error);
  try {
    check_wet(h, g, 1e-8, "test");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DryBed);
  }
  HsgnState s(g.size());
  std::fill(s.h.begin(), s.h.end(), 1.0);
  s.q[g.begin()] = std::nan("");
  try {
    check_finite(s, g, "test");
    FAIL("expected NonFinite");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonFinite);
  }
}

TEST_CASE("names round-trip and bad names are rejected") {
  for (Boundary b : {Boundary::Transmissive, Boundary::Periodic, Boundary::Reflective}) {
    CHECK(parse_boundary(to_string(b)) == b);
  }
  CHECK_THROWS_AS(parse_boundary("open"), Error);
  CHECK(parse_si_stencil(to_string(SiStencil::Compact)) == SiStencil::Compact);
}

TEST_CASE("scheme parameters are validated") {
  SchemeParams p;
  CHECK_NOTHROW(p.validate());
  p.order = 3;
  CHECK_THROWS_AS(p.validate(), Error);
  p = SchemeParams{};
  p.lambda = 0.0;
  CHECK_THROWS_AS(p.validate(), Error);
  p = SchemeParams{};
  p.mcfl_limit = 1.5;
  CHECK_THROWS_AS(p.validate(), Error);
}

TEST_CASE("piecewise-linear bathymetry and its derivatives") {
  const Grid1D g = make_grid(0.0, 10.0, 100);
  const PiecewiseLinear prof{{{2.0, 0.0}, {6.0, 0.4}}};
  CHECK(prof(0.0) == 0.0);
  CHECK(prof(4.0) == doctest::Approx(0.2));
  CHECK(prof(9.0) == doctest::Approx(0.4));
  const Bathymetry b = make_bathymetry(g, prof);
  const std::size_t mid = g.nearest_cell(4.0);
  CHECK(b.b_x[mid] == doctest::Approx(0.1));
  CHECK(b.b_xx[mid] == doctest::Approx(0.0).epsilon(1e-10));
}
