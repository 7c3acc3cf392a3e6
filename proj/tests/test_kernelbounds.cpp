#include <cmath>

#include "doctest.h"
#include "heatlab/kernelbounds.hpp"

using namespace heatlab;

TEST_CASE("default xi grid hits the anchors exactly") {
  const auto grid = default_xi_grid(100.0);
  CHECK(grid.front() == 0.0);
  CHECK(grid[64] == 1.0);
  CHECK(grid.back() == doctest::Approx(100.0).epsilon(1e-12));
}

TEST_CASE("two-sided bound constants on the line") {
  const auto grid = default_xi_grid(100.0);
  const auto rep = li_yau_constants(HeatKernel::euclidean(1), 2.0, grid);
  // Oracle: the c1 integrand is (1/sqrt(pi)) e^{-xi/12}, maximal at xi = 0;
  // the c2 integrand is (1/sqrt(pi)) e^{+xi/4}, minimal at xi = 0.
  const double target = 2.0 / std::sqrt(4.0 * M_PI);
  CHECK(rep.c1 == doctest::Approx(target).epsilon(1e-3));
  CHECK(rep.c2 == doctest::Approx(target).epsilon(1e-3));
  CHECK(rep.c1 >= rep.c2);

  CHECK_THROWS_AS(li_yau_constants(HeatKernel::euclidean(1), 4.0, grid),
                  PreconditionError);
  CHECK_THROWS_AS(li_yau_constants(HeatKernel::euclidean(1), -1.0, grid),
                  PreconditionError);
}

TEST_CASE("zero-distance consistency for every model") {
  const auto grid = default_xi_grid(50.0);
  const std::vector<double> ts = {0.5, 1.0, 2.0};
  for (const HeatKernel& K : {HeatKernel::euclidean(2), HeatKernel::hyperbolic3()}) {
    const auto rep = li_yau_constants(K, 2.0, grid, ts);
    // At xi = 0 both exponential factors are one, so G(x,x,t) |B(x, sqrt t)|
    // lies between the measured constants.
    for (double t : ts) {
      const double val =
          std::exp(K.log_G(0.0, t)) * ball_volume(K.manifold(), std::sqrt(t));
      CHECK(rep.c2 <= val * (1.0 + 1e-12));
      CHECK(val <= rep.c1 * (1.0 + 1e-12));
    }
    CHECK(rep.c2 > 0.0);
  }
}

TEST_CASE("constants tighten monotonically in delta") {
  const auto grid = default_xi_grid(100.0);
  const HeatKernel K = HeatKernel::hyperbolic3();
  const std::vector<double> ts = {0.5, 1.0, 2.0, 5.0};
  double prev_c1 = std::numeric_limits<double>::infinity();
  double prev_c2 = 0.0;
  for (double delta : {1.0, 2.0, 3.0}) {
    const auto rep = li_yau_constants(K, delta, grid, ts);
    CHECK(rep.c1 <= prev_c1 * (1.0 + 1e-12));  // smaller delta: larger c1
    CHECK(rep.c2 >= prev_c2 * (1.0 - 1e-12));  // smaller delta: smaller c2
    prev_c1 = rep.c1;
    prev_c2 = rep.c2;
  }
}

TEST_CASE("kernel gradient ratio sweep") {
  const auto grid = default_xi_grid(100.0);
  const HeatKernel E1 = HeatKernel::euclidean(1);
  const double sup = kernel_gradient_check(E1, grid);
  CHECK(sup == doctest::Approx(0.25).epsilon(1e-9));

  // Independent maximization oracle for sqrt(xi)/(2(1+xi)).
  double oracle = 0.0;
  for (int i = 0; i <= 100000; ++i) {
    const double xi = 100.0 * i / 100000.0;
    oracle = std::max(oracle, std::sqrt(xi) / (2.0 * (1.0 + xi)));
  }
  CHECK(sup == doctest::Approx(oracle).epsilon(1e-8));

  CHECK(E1.grad_ratio(0.0, 1.0) == 0.0);

  // Self-similarity: the sweep is independent of the time slice on the line.
  const std::vector<double> t_half = {0.5}, t_two = {2.0};
  CHECK(std::abs(kernel_gradient_check(E1, grid, t_half) -
                 kernel_gradient_check(E1, grid, t_two)) <= 1e-9);

  // The hyperbolic sweep needs the (xi, t) product grid and stays finite.
  std::vector<double> ts;
  for (int i = 0; i <= 20; ++i) ts.push_back(0.1 * std::pow(10.0, 2.0 * i / 20.0));
  const double sup_h = kernel_gradient_check(HeatKernel::hyperbolic3(), grid, ts);
  CHECK(std::isfinite(sup_h));
  CHECK(sup_h > 0.25);  // curvature pushes the constant above the flat value

  const auto csv = kernel_gradient_sweep_csv(E1, default_xi_grid(2.0));
  CHECK(csv.header.size() == 5);
  CHECK(csv.rows.size() == default_xi_grid(2.0).size());
}

TEST_CASE("euclidean gradient ratio is exactly d/(2t)") {
  CHECK(euclidean_exact_ratio(1, 1.0, 1.0) == 0.5);
  CHECK(euclidean_exact_ratio(3, 0.0, 0.7) == 0.0);
  CHECK(euclidean_exact_ratio(3, 3.0, 0.25) == doctest::Approx(6.0).epsilon(1e-14));
  CHECK_THROWS_AS(euclidean_exact_ratio(2, 1.0, 0.0), DomainError);
}

TEST_CASE("proof replay of the kernel-gradient bound") {
  const Thm13Trace tr = thm13_pipeline(HeatKernel::euclidean(1), 2.0, 1.0, 2.0);
  CHECK(tr.passed);
  CHECK(tr.lhs == doctest::Approx(1.0));  // d/(2t) at d = 2, t = 1
  CHECK(tr.lhs <= tr.bound_direct * (1.0 + 1e-9));
  CHECK(tr.bound_direct <= tr.final_bound * (1.0 + 1e-9));
  for (double v : {tr.log_M, tr.c1, tr.c2, tr.doubling, tr.c3, tr.c_hat, tr.c4})
    CHECK(std::isfinite(v));
  CHECK(tr.doubling == doctest::Approx(2.0).epsilon(1e-12));  // factor 2 on the line

  // Coincident points: every step finite, bound covers the zero gradient.
  const Thm13Trace same = thm13_pipeline(HeatKernel::euclidean(2), 0.0, 1.0, 2.0);
  CHECK(same.passed);
  CHECK(same.lhs == 0.0);
  CHECK(same.final_bound >= 0.0);

  // Growth in xi follows the (1 + xi) shape and dominates the direct check.
  const HeatKernel E3 = HeatKernel::euclidean(3);
  const double c_emp = kernel_gradient_check(E3, default_xi_grid(100.0));
  double prev = 0.0;
  for (double xi : {0.5, 2.0, 8.0}) {
    const Thm13Trace t3 = thm13_pipeline(E3, std::sqrt(xi), 1.0, 2.0);
    CHECK(t3.passed);
    CHECK(t3.final_bound > prev);
    CHECK(t3.final_bound >= c_emp * (1.0 + xi) * (1.0 - 1e-9));
    prev = t3.final_bound;
  }

  CHECK_THROWS_AS(thm13_pipeline(HeatKernel::hyperbolic3(), 1.0, 1.0, 2.0), MisuseError);

  const auto csv = tr.csv();
  CHECK(csv.header.size() == 2);
  CHECK(csv.rows.size() == 16);
}

TEST_CASE("kernel report serializes") {
  const auto rep = li_yau_constants(HeatKernel::euclidean(1), 2.0, default_xi_grid(10.0));
  const std::string j = rep.to_json();
  for (const char* key : {"\"schema\"", "\"model\"", "\"delta\"", "\"c1\"", "\"c2\"",
                          "\"grad_ratio_sup\""})
    CHECK(j.find(key) != std::string::npos);
}
