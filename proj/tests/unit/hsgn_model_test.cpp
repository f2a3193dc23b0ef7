#include <cmath>

#include "doctest.h"
#include "sgn/hsgn_model.hpp"

using namespace sgn;

TEST_CASE("relaxed states carry hydrostatic pressure") {
  for (double h : {0.3, 1.0, 2.5}) {
    CHECK(hsgn::pressure(h, h, 9.81, 1000.0) == doctest::Approx(0.5 * 9.81 * h * h));
    CHECK(hsgn::celerity_squared(h, h, 9.81, 1000.0) == doctest::Approx(9.81 * h + 1000.0 / 3.0));
    CHECK(hsgn::relaxation_source(h, h, 1000.0) == 0.0);
  }
}

TEST_CASE("eigenvalues are u -+ c around a double material speed") {
  const auto ev = hsgn::eigenvalues(1.2, 0.3, 1.1, 9.81, 500.0);
  const double c = hsgn::celerity(1.2, 1.1, 9.81, 500.0);
  CHECK(ev[0] == doctest::Approx(0.3 - c));
  CHECK(ev[1] == 0.3);
  CHECK(ev[2] == 0.3);
  CHECK(ev[3] == doctest::Approx(0.3 + c));
}

TEST_CASE("p_x = a2 h_x + lambda alpha (h eta)_x, checked by centred differences") {
  const double g = 9.81, lambda = 700.0;
  auto h = [](double x) { return 1.0 + 0.3 * std::sin(x); };
  auto eta = [](double x) { return 1.1 + 0.2 * std::cos(2.0 * x); };
  auto p = [&](double x) { return hsgn::pressure(h(x), eta(x), g, lambda); };
  auto he = [&](double x) { return h(x) * eta(x); };
  auto defect = [&](double dx) {
    double e = 0.0;
    for (double x = 0.0; x < 6.0; x += 0.37) {
      const auto k = hsgn::pressure_gradient_coeffs(h(x), eta(x), g, lambda);
      const double lhs = (p(x + dx) - p(x - dx)) / (2 * dx);
      const double rhs = k.a2 * (h(x + dx) - h(x - dx)) / (2 * dx) +
                         lambda * k.alpha * (he(x + dx) - he(x - dx)) / (2 * dx);
      e = std::max(e, std::abs(lhs - rhs));
    }
    return e;
  };
  const double order = std::log2(defect(1e-2) / defect(5e-3));
  CHECK(order > 1.9);
  CHECK(order < 2.1);
}

TEST_CASE("along relaxed profiles the coefficient form collapses to g h h_x") {
  // eta = h gives (h eta)_x = 2 h h_x and p = g h^2 / 2
  const double h = 1.3, g = 9.81, lambda = 400.0;
  const auto k = hsgn::pressure_gradient_coeffs(h, h, g, lambda);
  CHECK(k.a2 + 2.0 * lambda * k.alpha * h ==
        doctest::Approx(g * h));
}

TEST_CASE("bathymetric helpers") {
  CHECK(hsgn::bathy_p_tilde(1.0, 1.0, 300.0) == 0.0);
  CHECK(hsgn::bathy_momentum_source(2.0, 2.0, 9.81, 300.0, 0.1) == doctest::Approx(2.0 * 9.81 * 0.1));
  CHECK(hsgn::eta_from_evolved(hsgn::evolved_from_eta(0.7, 0.2), 0.2) == doctest::Approx(0.7));
}

TEST_CASE("non-positive depth is rejected") {
  CHECK_THROWS_AS(hsgn::pressure(0.0, 1.0, 9.81, 1.0), Error);
  CHECK_THROWS_AS(hsgn::alpha_coeff(-1.0, 1.0), Error);
}
