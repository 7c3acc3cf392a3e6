#include <cmath>

#include "doctest.h"
#include "heatlab/corpus.hpp"
#include "heatlab/estimates.hpp"

using namespace heatlab;

namespace {

const ParabolicCube kQ = ParabolicCube::from_corners(1.0, 3.0, 1.0, 2.0);

HeatSolution wave(double a) {
  SolutionParams p;
  p.a = a;
  p.domain = Rect{1.0, 3.0, 1.0, 2.0};
  return make_closed_form(ClosedFormKind::TravelingWave, ModelManifold::euclidean(1), p);
}

}  // namespace

TEST_CASE("estimate id parsing") {
  CHECK(parse_estimate_id("sz14") == EstimateId::SZ_1_4);
  CHECK(parse_estimate_id("SZ_1_4") == EstimateId::SZ_1_4);
  CHECK(parse_estimate_id("cy-1-1") == EstimateId::CY_1_1);
  CHECK(to_string(EstimateId::HAM_1_3) == "HAM_1_3");
  CHECK_THROWS_AS(parse_estimate_id("zz99"), ConstructionError);
}

TEST_CASE("left-hand quantities") {
  const HeatSolution tw = wave(1.0);
  CHECK(evaluate_lhs(EstimateId::SZ_1_4, tw, 2.0, 2.0) == 1.0);

  // The parabolic quantity of the Gaussian kernel is exactly n/(2t).
  for (int n = 1; n <= 3; ++n) {
    SolutionParams p;
    p.domain = n == 1 ? Rect{-1.0, 1.0, 0.25, 2.0} : Rect{0.0, 1.0, 0.25, 2.0};
    const HeatSolution g =
        make_closed_form(ClosedFormKind::GaussianKernel, ModelManifold::euclidean(n), p);
    for (const auto& [x, t] : interior_points(g, ParabolicCube(0.0, 1.0, 1.0, 0.5), 20))
      CHECK(evaluate_lhs(EstimateId::LY_1_2, g, x, t) ==
            doctest::Approx(n / (2.0 * t)).epsilon(1e-12));
  }

  SolutionParams pc;
  pc.c = 3.0;
  pc.domain = Rect{1.0, 3.0, 1.0, 2.0};
  const HeatSolution c3 =
      make_closed_form(ClosedFormKind::Constant, ModelManifold::euclidean(1), pc);
  for (EstimateId id : {EstimateId::CY_1_1, EstimateId::LY_1_2, EstimateId::HAM_1_3,
                        EstimateId::SZ_1_4, EstimateId::SZ_1_5})
    CHECK(evaluate_lhs(id, c3, 2.0, 1.5) == 0.0);

  // Harmonic-only check refuses time-dependent input.
  CHECK_THROWS_AS(evaluate_lhs(EstimateId::CY_1_1, tw, 2.0, 2.0), MisuseError);
}

TEST_CASE("right-hand values on the sharpness fixture") {
  const double a = 2.0;
  const HeatSolution tw = wave(a);
  CHECK(evaluate_rhs(EstimateId::SZ_1_4, tw, kQ, 0.0, 1.0, 2.0, 2.0) ==
        doctest::Approx(2.0 * (1.0 + a)).epsilon(1e-12));
  CHECK(evaluate_rhs(EstimateId::HAM_1_3, tw, kQ, 0.0, 1.0, 2.0, 2.0) ==
        doctest::Approx(0.5 * a).epsilon(1e-12));

  CHECK_THROWS_AS(evaluate_rhs_with_log_sup(EstimateId::SZ_1_4, tw, kQ, 0.0, 1.0, 2.0,
                                            2.0, /*log_M=*/1.0),
                  DataError);
  CHECK_THROWS_AS(evaluate_rhs(EstimateId::SZ_1_5, tw, kQ, 1.0, 1.0, 2.0, 1.2),
                  MisuseError);
}

TEST_CASE("instantaneous form uses u at doubled time") {
  SolutionParams p;
  p.domain = Rect{-1.0, 1.0, 0.25, 2.5};
  const HeatSolution g =
      make_closed_form(ClosedFormKind::GaussianKernel, ModelManifold::euclidean(1), p);
  const double x = 1.0, t = 1.0;
  const double expected = 1.0 * (1.0 + (-0.5 * std::log(2.0) + x * x / (8.0 * t)));
  CHECK(evaluate_rhs(EstimateId::SZ_1_5, g, ParabolicCube(0.0, 1.0, 1.0, 0.5), 0.0, 1.0,
                     x, t) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("report on the harmonic linear solution") {
  SolutionParams p;
  p.domain = Rect{1.0, 3.0, 0.0, 1.0};
  const HeatSolution lin =
      make_closed_form(ClosedFormKind::Linear, ModelManifold::euclidean(1), p);
  const EstimateReport rep = report(EstimateId::CY_1_1, lin,
                                    ParabolicCube::from_corners(1.0, 3.0, 0.0, 1.0), 0.0,
                                    1.0);
  CHECK(rep.lhs_sup == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(rep.rhs == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rep.ratio == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(rep.argmax_x == doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("report sweeps the half cube for the steep wave") {
  const EstimateReport rep = report(EstimateId::SZ_1_4, wave(8.0), kQ, 0.0, 1.0);
  // Point value a/(2(1+a)) = 8/18 at (2,2); the half-cube supremum is larger,
  // attained where ln(M/u) is smallest (corner (2.5, 2), value 0.8).
  CHECK(rep.ratio >= 8.0 / 18.0 - 1e-12);
  CHECK(rep.ratio == doctest::Approx(0.8).epsilon(1e-9));
  CHECK(rep.argmax_x == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(rep.argmax_t == doctest::Approx(2.0).epsilon(1e-12));

  // A lattice report on the Gaussian fixture is finite and positive.
  SolutionParams p;
  p.domain = Rect{-1.0, 1.0, 0.25, 2.0};
  const HeatSolution g =
      make_closed_form(ClosedFormKind::GaussianKernel, ModelManifold::euclidean(1), p);
  const EstimateReport rg =
      report(EstimateId::SZ_1_4, g, ParabolicCube(0.0, 1.0, 1.0, 0.5), 0.0, 1.0);
  CHECK(std::isfinite(rg.ratio));
  CHECK(rg.ratio > 0.0);
}

TEST_CASE("right-hand side is monotone in the cube dimensions") {
  const HeatSolution tw = wave(1.0);
  const double log_M = tw.log_sup(kQ);
  double prev = std::numeric_limits<double>::infinity();
  for (double R : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    const double rhs = evaluate_rhs_with_log_sup(
        EstimateId::SZ_1_4, tw, ParabolicCube(2.0, R, 2.0, 1.0), 0.0, 1.0, 2.0, 2.0,
        log_M);
    CHECK(rhs <= prev);
    prev = rhs;
  }
  prev = std::numeric_limits<double>::infinity();
  for (double T : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    const double rhs = evaluate_rhs_with_log_sup(
        EstimateId::SZ_1_4, tw, ParabolicCube(2.0, 1.0, 2.0, T), 0.0, 1.0, 2.0, 2.0,
        log_M);
    CHECK(rhs <= prev);
    prev = rhs;
  }
}

TEST_CASE("sharpness scan matches the algebraic ratios") {
  const std::vector<double> as = {1, 2, 4, 8, 16, 32};
  const auto rows = sharpness_scan(as);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].ratio == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(rows[5].ratio == doctest::Approx(32.0 / 66.0).epsilon(1e-12));
  for (const auto& r : rows) {
    CHECK(r.lhs == doctest::Approx(r.a).epsilon(1e-13));
    CHECK(r.rhs_at_c1 == doctest::Approx(2.0 * (1.0 + r.a)).epsilon(1e-12));
    CHECK(r.ratio < 0.5);
  }
  CHECK_NOTHROW(validate_sharpness(rows));
  CHECK_THROWS_AS(sharpness_scan(std::vector<double>{2.0, 1.0}), PreconditionError);
  CHECK_THROWS_AS(sharpness_scan(std::vector<double>{-1.0}), PreconditionError);
}

TEST_CASE("bounded-solution form fails with unbounded ratio on the line") {
  const std::vector<double> as = {1, 8, 64};
  const auto rows = hamilton_failure_scan(as);
  CHECK(rows[0].ratio == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(rows[1].ratio == doctest::Approx(16.0).epsilon(1e-12));
  CHECK(rows[2].ratio == doctest::Approx(128.0).epsilon(1e-12));
  CHECK_NOTHROW(validate_hamilton_failure(rows));
}

TEST_CASE("bounded-solution estimate holds on the compact positive control") {
  const HeatSolution torus = make_torus_wave(Rect{0.0, 2.0 * M_PI, 0.2, 4.0});
  const double log_M = std::log(3.0);  // global bound over all t > 0
  const ParabolicCube cube = ParabolicCube::from_corners(0.0, 2.0 * M_PI, 0.25, 4.0);
  for (int m = 0; m <= 40; ++m)
    for (int i = 0; i <= 40; ++i) {
      const double x = 2.0 * M_PI * i / 40.0;
      const double t = 0.25 + 3.75 * m / 40.0;
      const double lhs = evaluate_lhs(EstimateId::HAM_1_3, torus, x, t);
      const double rhs = evaluate_rhs_with_log_sup(EstimateId::HAM_1_3, torus, cube, 0.0,
                                                   1.0, x, t, log_M);
      CHECK(lhs <= rhs * (1.0 + 1e-9));
    }
}

TEST_CASE("elliptic Harnack exponent from segment integration") {
  SolutionParams pc;
  pc.c = 4.0;
  pc.domain = Rect{1.0, 3.0, 1.0, 2.0};
  const HeatSolution c4 =
      make_closed_form(ClosedFormKind::Constant, ModelManifold::euclidean(1), pc);
  const HarnackResult hc = harnack_theta(c4, kQ, 2.0, 2.5, 2.0, 0.5);
  CHECK(hc.holds);
  CHECK(hc.c <= 1.0);
  CHECK(hc.theta == doctest::Approx(std::exp(-0.5 * 2.0 * 0.5)).epsilon(1e-13));

  // Degenerate segment: theta = 1, c = 1, equality.
  const HarnackResult hx = harnack_theta(c4, kQ, 2.0, 2.0, 2.0, 1.0);
  CHECK(hx.theta == 1.0);
  CHECK(hx.c == 1.0);
  CHECK(hx.holds);
  CHECK(hx.lhs == doctest::Approx(hx.rhs).epsilon(1e-13));

  // Wave fixture with its measured report constant.
  const HeatSolution tw = wave(1.0);
  const double c_hat = report(EstimateId::SZ_1_4, tw, kQ, 0.0, 1.0).ratio;
  CHECK(c_hat == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  const HarnackResult hw = harnack_theta(tw, kQ, 2.0, 2.5, 2.0, c_hat);
  CHECK(hw.holds);

  CHECK_THROWS_AS(harnack_theta(tw, kQ, 1.2, 2.8, 2.0, 1.0), PreconditionError);
  SolutionParams ph;
  ph.domain = Rect{0.4, 3.6, 0.5, 4.0};
  const HeatSolution h3 = make_closed_form(ClosedFormKind::Hyperbolic3Kernel,
                                           ModelManifold::hyperbolic(3, -1.0), ph);
  CHECK_THROWS_AS(harnack_theta(h3, ParabolicCube(2.0, 1.5, 2.0, 1.0), 2.0, 2.5, 2.0, 1.0),
                  MisuseError);
}

TEST_CASE("ratios rescale invariantly and the empirical constant closes") {
  const auto corpus = ratio_corpus();
  double c_hat = 0.0;
  for (const CorpusEntry& e : corpus) {
    const EstimateReport base = report(EstimateId::SZ_1_4, e.u, e.cube, e.k, 1.0);
    c_hat = std::max(c_hat, base.ratio);
    for (double lambda : {0.1, 7.0}) {
      const EstimateReport rs =
          report(EstimateId::SZ_1_4, e.u.scaled(lambda), e.cube, e.k, 1.0);
      INFO(e.u.name());
      CHECK(std::abs(rs.ratio - base.ratio) <=
            1e-12 * std::max(1e-30, std::abs(base.ratio)));
    }
  }
  for (const CorpusEntry& e : corpus)
    CHECK(report(EstimateId::SZ_1_4, e.u, e.cube, e.k, c_hat).ratio <= 1.0 + 1e-9);
}

TEST_CASE("report json carries the flat schema") {
  const EstimateReport rep = report(EstimateId::SZ_1_4, wave(1.0), kQ, 0.0, 1.0);
  const std::string j = rep.to_json();
  for (const char* key : {"\"schema\"", "\"estimate_id\"", "\"R\"", "\"T\"", "\"k\"",
                          "\"constant\"", "\"lhs_sup\"", "\"rhs\"", "\"ratio\"",
                          "\"argmax_r\"", "\"argmax_t\"", "\"M\""})
    CHECK(j.find(key) != std::string::npos);
  CHECK(j.find("\"SZ_1_4\"") != std::string::npos);
}
