#include <cmath>

#include "doctest.h"
#include "heatlab/geometry.hpp"

using namespace heatlab;

namespace {

// Independent quadrature oracle: composite Simpson of the sphere-area density.
double simpson_volume(const ModelManifold& M, double r, int panels) {
  const double h = r / panels;
  auto f = [&](double s) {
    if (s <= 0.0) return 0.0;
    return unit_sphere_area(M.dim()) * std::pow(M.warp(s), M.dim() - 1);
  };
  double sum = f(0.0) + f(r);
  for (int i = 1; i < panels; ++i) sum += f(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

// Flux-form Laplacian (phi^{n-1} u')' / phi^{n-1} by symmetric differences.
double flux_laplacian(const ModelManifold& M, const RadialProfile& u, double r,
                      double h) {
  auto flux = [&](double s) {
    return std::pow(M.warp(s), M.dim() - 1) * u.d1(s);
  };
  return (flux(r + h) - flux(r - h)) / (2.0 * h * std::pow(M.warp(r), M.dim() - 1));
}

}  // namespace

TEST_CASE("radial laplacian on the model geometries") {
  const RadialProfile square{[](double r) { return r * r; },
                             [](double r) { return 2.0 * r; },
                             [](double) { return 2.0; }};
  CHECK(radial_laplacian(ModelManifold::euclidean(3), square, 1.0) ==
        doctest::Approx(6.0).epsilon(1e-14));

  const RadialProfile logr{[](double r) { return std::log(r); },
                           [](double r) { return 1.0 / r; },
                           [](double r) { return -1.0 / (r * r); }};
  CHECK(radial_laplacian(ModelManifold::euclidean(2), logr, 2.0) ==
        doctest::Approx(0.0).epsilon(1e-14));

  // Closed form (n-1) coth(r) on H^3, cross-checked against the flux form.
  const ModelManifold H3 = ModelManifold::hyperbolic(3, -1.0);
  const RadialProfile ident{[](double r) { return r; }, [](double) { return 1.0; },
                            [](double) { return 0.0; }};
  const double lap = radial_laplacian(H3, ident, 1.0);
  CHECK(lap == doctest::Approx(2.0 * std::cosh(1.0) / std::sinh(1.0)).epsilon(1e-12));
  CHECK(lap == doctest::Approx(flux_laplacian(H3, ident, 1.0, 1e-5)).epsilon(1e-8));

  CHECK_THROWS_AS(radial_laplacian(H3, ident, 0.0), DomainError);
}

TEST_CASE("flux-form agreement improves at second order") {
  const ModelManifold H3 = ModelManifold::hyperbolic(3, -1.0);
  const RadialProfile bump{[](double r) { return std::exp(-r); },
                           [](double r) { return -std::exp(-r); },
                           [](double r) { return std::exp(-r); }};
  const double exact = radial_laplacian(H3, bump, 1.2);
  const double e1 = std::abs(flux_laplacian(H3, bump, 1.2, 0.02) - exact);
  const double e2 = std::abs(flux_laplacian(H3, bump, 1.2, 0.01) - exact);
  const double ratio = e1 / e2;
  CHECK(ratio >= 3.2);
  CHECK(ratio <= 4.8);
}

TEST_CASE("ricci lower bounds") {
  CHECK(ricci_lower_bound(ModelManifold::euclidean(5), 10.0) == 0.0);
  CHECK(ricci_lower_bound(ModelManifold::hyperbolic(3, -1.0), 1.0) ==
        doctest::Approx(2.0));
  // Independent of the working radius on constant-curvature models.
  CHECK(ricci_lower_bound(ModelManifold::hyperbolic(3, -1.0), 1.0) ==
        ricci_lower_bound(ModelManifold::hyperbolic(3, -1.0), 7.0));

  WarpProfile sinh_profile{[](double r) { return std::sinh(r); },
                           [](double r) { return std::cosh(r); },
                           [](double r) { return std::sinh(r); }, 5.0};
  const ModelManifold W = ModelManifold::warped(2, sinh_profile);
  CHECK(W.ricci_bound() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(ricci_lower_bound(W, 5.0) == doctest::Approx(1.0).epsilon(1e-10));

  // A profile that vanishes inside the working range is rejected.
  WarpProfile sine_profile{[](double r) { return std::sin(r); },
                           [](double r) { return std::cos(r); },
                           [](double r) { return -std::sin(r); }, 5.0};
  CHECK_THROWS_AS(ModelManifold::warped(2, sine_profile), ConstructionError);

  WarpProfile bad_pole{[](double r) { return r + 1.0; }, [](double) { return 1.0; },
                       [](double) { return 0.0; }, 5.0};
  CHECK_THROWS_AS(ModelManifold::warped(2, bad_pole), ConstructionError);
}

TEST_CASE("ball volumes") {
  CHECK(ball_volume(ModelManifold::euclidean(1), 2.0) == doctest::Approx(4.0));
  CHECK(ball_volume(ModelManifold::euclidean(3), 1.0) ==
        doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-14));

  // H^3 ball: quadrature oracle against the closed form pi (sinh 2r - 2r).
  const ModelManifold H3 = ModelManifold::hyperbolic(3, -1.0);
  const double closed = M_PI * (std::sinh(2.0) - 2.0);
  CHECK(closed == doctest::Approx(5.110932705710986).epsilon(1e-12));
  CHECK(simpson_volume(H3, 1.0, 2048) == doctest::Approx(closed).epsilon(1e-9));
  CHECK(ball_volume(H3, 1.0) == doctest::Approx(closed).epsilon(1e-9));

  CHECK_THROWS_AS(ball_volume(H3, -1.0), DomainError);
  CHECK_THROWS_AS(ball_volume(ModelManifold::sphere(2, 1.0), 4.0), DomainError);
}

TEST_CASE("volume doubling on nonnegative-Ricci models") {
  for (int n = 1; n <= 3; ++n) {
    const ModelManifold E = ModelManifold::euclidean(n);
    for (double r : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      const double lhs = ball_volume(E, 2.0 * r);
      const double rhs = std::pow(2.0, n) * ball_volume(E, r);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
  const ModelManifold S = ModelManifold::sphere(2, 1.0);
  for (double r : {0.2, 0.5, 1.0, 1.5}) {
    CHECK(ball_volume(S, 2.0 * r) <= 4.0 * ball_volume(S, r) * (1.0 + 1e-12));
  }
}

TEST_CASE("parabolic cube geometry") {
  const ParabolicCube q = ParabolicCube::from_corners(1.0, 3.0, 1.0, 2.0);
  CHECK(q.x0 == 2.0);
  CHECK(q.R == 1.0);
  CHECK(q.t0 == 2.0);
  CHECK(q.T == 1.0);
  const ParabolicCube h = q.half();
  CHECK(h.x_lo() == 1.5);
  CHECK(h.t_lo() == 1.5);
  CHECK(q.contains(h.x_lo(), h.t_lo()));
  CHECK(q.quarter_time().t_lo() == 1.75);
  CHECK_THROWS_AS(ParabolicCube(0.0, -1.0, 0.0, 1.0), ConstructionError);
  CHECK_THROWS_AS(ParabolicCube(0.0, 1.0, 0.0, 0.0), ConstructionError);
}

TEST_CASE("unit sphere areas") {
  CHECK(unit_sphere_area(1) == doctest::Approx(2.0));
  CHECK(unit_sphere_area(2) == doctest::Approx(2.0 * M_PI));
  CHECK(unit_sphere_area(3) == doctest::Approx(4.0 * M_PI));
}
