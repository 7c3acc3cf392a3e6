#include "heatlab/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "heatlab/corpus.hpp"
#include "heatlab/estimates.hpp"
#include "heatlab/kernelbounds.hpp"
#include "heatlab/liouville.hpp"
#include "heatlab/proofcheck.hpp"
#include "json.hpp"

namespace heatlab::acceptance {

namespace {

struct Gate {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& msg) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += "FAILED: " + msg;
    }
  }
  void note(const std::string& msg) {
    if (!detail.empty()) detail += "; ";
    detail += msg;
  }
};

std::vector<std::pair<double, double>> half_cube_lattice(const HeatSolution& u,
                                                         const ParabolicCube& cube,
                                                         int nx, int nt) {
  const Rect box = cube_box(u, cube.half());
  std::vector<std::pair<double, double>> pts;
  pts.reserve(static_cast<size_t>(nx) * nt);
  for (int m = 0; m < nt; ++m) {
    const double t = box.t_lo + (box.t_hi - box.t_lo) * m / (nt - 1);
    for (int i = 0; i < nx; ++i) {
      double x = box.x_lo + (box.x_hi - box.x_lo) * i / (nx - 1);
      if (u.radial()) x = std::max(x, kPoleRadius);
      pts.emplace_back(x, t);
    }
  }
  return pts;
}

double solver_error_vs(const HeatSolution& exact, const GridSpec& spec) {
  const auto initial = [&](double r) { return exact.value(r, spec.t_lo); };
  const auto lo = [&](double t) { return exact.value(spec.r_lo, t); };
  const auto hi = [&](double t) { return exact.value(spec.r_hi, t); };
  const HeatSolution num = solve_radial_heat(exact.manifold(), initial, lo, hi, spec);
  const GridData& g = *num.grid();
  double err = 0.0;
  for (int m = 0; m < g.nt; ++m)
    for (int i = 0; i < g.nr; ++i)
      err = std::max(err, std::abs(g.at(i, m) - exact.value(g.r_of(i), g.t_of(m))));
  return err;
}

// --------------------------------------------------------------------------

CriterionResult criterion_1() {
  Gate g;
  const std::vector<double> as = {1, 2, 4, 8, 16, 32};
  const auto rows = sharpness_scan(as);
  for (const auto& r : rows) {
    const double expected = r.a / (2.0 * (1.0 + r.a));
    g.require(std::abs(r.ratio - expected) <= 1e-9,
              "ratio(a=" + io::fmt(r.a) + ") = " + io::fmt(r.ratio) +
                  " != " + io::fmt(expected));
  }
  for (size_t i = 1; i < rows.size(); ++i)
    g.require(rows[i].ratio > rows[i - 1].ratio, "ratios not strictly increasing");
  g.require(rows.back().ratio >= 0.48,
            "ratio(a=32) = " + io::fmt(rows.back().ratio) + " < 0.48");
  g.note("ratio(a=32) = " + io::fmt(rows.back().ratio));
  return {1, "sharpness of the localized estimate", g.ok, g.detail, 0.0};
}

CriterionResult criterion_2() {
  Gate g;
  const std::vector<double> as = {1, 2, 4, 8, 16, 32};
  const auto rows = hamilton_failure_scan(as);
  for (const auto& r : rows) {
    g.require(std::abs(r.ratio - 2.0 * r.a) <= 1e-9,
              "ratio(a=" + io::fmt(r.a) + ") != 2a");
    if (r.a >= 8.0) g.require(r.ratio > 10.0, "ratio must exceed 10 for a >= 8");
  }
  g.note("ratio(a=32) = " + io::fmt(rows.back().ratio));
  return {2, "bounded-solution estimate fails on the line", g.ok, g.detail, 0.0};
}

CriterionResult criterion_3() {
  Gate g;
  for (const CorpusEntry& e : analytic_corpus()) {
    const double log_M = e.u.log_sup(e.cube);
    const auto pts = half_cube_lattice(e.u, e.cube, 11, 11);  // 121 points
    const double feq = check_f_equation(e.u, log_M, pts);
    g.require(feq <= 1e-8, e.u.name() + ": f-equation residual " + io::fmt(feq));
    const double grad = check_gradient_consistency(e.u, log_M, pts);
    g.require(grad <= 1e-8, e.u.name() + ": gradient consistency " + io::fmt(grad));
    double wid = 0.0;
    for (const auto& [x, t] : pts)
      wid = std::max(wid, check_w_identity(e.u, log_M, x, t));
    g.require(wid <= 1e-8, e.u.name() + ": w-identity residual " + io::fmt(wid));
    const double key = check_key_inequality(e.u, log_M, e.k, pts);
    g.require(key >= -1e-8, e.u.name() + ": key inequality residual " + io::fmt(key));
  }
  return {3, "proof identity chain on the analytic corpus", g.ok, g.detail, 0.0};
}

CriterionResult criterion_4() {
  Gate g;
  const CutoffProfile psi = build_cutoff(1.0, 1.0, 0.5, 4);
  const auto c1 = psi.measure(201, 201);
  const auto c2 = psi.measure(401, 401);
  g.require(c1.r1 >= 7.99 && c1.r1 <= 8.01,
            "sup R|psi_r|/psi^(1/2) = " + io::fmt(c1.r1) + " outside [7.99, 8.01]");
  for (double v : {c1.r1, c1.r2, c1.t1, c1.grad_sq})
    g.require(std::isfinite(v) && v > 0.0, "property constant not finite");
  auto stable = [&](double a, double b, const char* name) {
    g.require(std::abs(a - b) <= 0.01 * std::max(a, b),
              std::string(name) + " not grid-stable within 1%");
  };
  stable(c1.r1, c2.r1, "r1");
  stable(c1.r2, c2.r2, "r2");
  stable(c1.t1, c2.t1, "t1");
  stable(c1.grad_sq, c2.grad_sq, "grad_sq");
  for (int m = 0; m < 21; ++m)
    for (int i = 0; i < 21; ++i) {
      const double x = -0.5 + 1.0 * i / 20.0;    // |x| <= R/2
      const double t = -0.25 + 0.25 * m / 20.0;  // t0 - T/4 <= t <= t0
      g.require(psi.psi(x, t) == 1.0, "psi != 1 on the inner region");
    }
  g.note("constants: " + io::fmt(c1.r1) + ", " + io::fmt(c1.r2) + ", " +
         io::fmt(c1.t1) + ", " + io::fmt(c1.grad_sq));
  return {4, "cutoff properties and measured constants", g.ok, g.detail, 0.0};
}

CriterionResult criterion_5() {
  Gate g;
  for (int n = 1; n <= 3; ++n) {
    SolutionParams p;
    p.domain = n == 1 ? Rect{-1.0, 1.0, 0.25, 2.0} : Rect{0.0, 1.0, 0.25, 2.0};
    const HeatSolution u =
        make_closed_form(ClosedFormKind::GaussianKernel, ModelManifold::euclidean(n), p);
    const ParabolicCube cube(0.0, 1.0, 1.0, 0.5);
    double worst = 0.0;
    for (const auto& [x, t] : interior_points(u, cube, 50))
      worst = std::max(worst,
                       std::abs(evaluate_lhs(EstimateId::LY_1_2, u, x, t) - n / (2.0 * t)));
    g.require(worst <= 1e-10,
              "n=" + std::to_string(n) + ": |LHS - n/(2t)| up to " + io::fmt(worst));
  }
  return {5, "parabolic gradient quantity is exactly n/(2t) for the kernel", g.ok,
          g.detail, 0.0};
}

CriterionResult criterion_6() {
  Gate g;
  const auto grid = default_xi_grid(100.0);
  const double sup = kernel_gradient_check(HeatKernel::euclidean(1), grid);
  g.require(std::abs(sup - 0.25) <= 1e-6, "sup = " + io::fmt(sup) + " != 0.25");
  const double exact = euclidean_exact_ratio(1, 1.0, 1.0);
  g.require(exact == 0.5, "exact ratio at d = 1, t = 1 must be 0.5");
  g.note("sup = " + io::fmt(sup));
  return {6, "kernel gradient ratio: sup 1/4 at xi = 1, exact d/(2t)", g.ok, g.detail,
          0.0};
}

CriterionResult criterion_7() {
  Gate g;
  const auto grid = default_xi_grid(100.0);
  const HeatKernel K = HeatKernel::euclidean(1);
  const auto rep = li_yau_constants(K, 2.0, grid);
  const double target = 1.0 / std::sqrt(M_PI);
  g.require(std::abs(rep.c1 - target) <= 1e-3, "c1 = " + io::fmt(rep.c1));
  g.require(std::abs(rep.c2 - target) <= 1e-3, "c2 = " + io::fmt(rep.c2));
  const auto r1 = li_yau_constants(K, 1.0, grid);
  const auto r3 = li_yau_constants(K, 3.0, grid);
  g.require(r1.c1 >= rep.c1 - 1e-12 && rep.c1 >= r3.c1 - 1e-12,
            "c1 must not increase with delta");
  g.require(r1.c2 <= rep.c2 + 1e-12 && rep.c2 <= r3.c2 + 1e-12,
            "c2 must not decrease with delta");
  g.note("c1 = " + io::fmt(rep.c1) + ", c2 = " + io::fmt(rep.c2));
  return {7, "two-sided kernel bound constants and delta monotonicity", g.ok, g.detail,
          0.0};
}

CriterionResult criterion_8() {
  Gate g;
  {
    SolutionParams p;
    p.a = 1.0;
    p.domain = Rect{1.0, 3.0, 1.0, 2.0};
    const HeatSolution exact =
        make_closed_form(ClosedFormKind::TravelingWave, ModelManifold::euclidean(1), p);
    const double coarse = solver_error_vs(exact, {1.0, 3.0, 1.0, 2.0, 33, 33});
    const double fine = solver_error_vs(exact, {1.0, 3.0, 1.0, 2.0, 65, 65});
    const double ratio = coarse / fine;
    g.require(ratio >= 3.2 && ratio <= 4.8,
              "traveling-wave error ratio " + io::fmt(ratio) + " outside [3.2, 4.8]");
    g.note("wave ratio = " + io::fmt(ratio));
  }
  {
    SolutionParams p;
    p.domain = Rect{0.5, 4.0, 0.5, 1.5};
    const HeatSolution exact = make_closed_form(ClosedFormKind::Hyperbolic3Kernel,
                                                ModelManifold::hyperbolic(3, -1.0), p);
    const double coarse = solver_error_vs(exact, {0.5, 4.0, 0.5, 1.5, 33, 33});
    const double fine = solver_error_vs(exact, {0.5, 4.0, 0.5, 1.5, 65, 65});
    const double ratio = coarse / fine;
    g.require(ratio >= 3.2 && ratio <= 4.8,
              "hyperbolic error ratio " + io::fmt(ratio) + " outside [3.2, 4.8]");
    g.note("hyperbolic ratio = " + io::fmt(ratio));
  }
  return {8, "solver second-order convergence against closed forms", g.ok, g.detail, 0.0};
}

CriterionResult criterion_9() {
  Gate g;
  const std::vector<double> radii = {4, 16, 64};
  {
    SolutionParams p;
    p.c = 5.0;
    p.domain = Rect{-70.0, 70.0, -4200.0, 4200.0};
    const HeatSolution u =
        make_closed_form(ClosedFormKind::Constant, ModelManifold::euclidean(1), p);
    const auto sweep = gradient_decay_sweep_a(u, 0.0, 0.0, radii, 1.0);
    for (size_t i = 1; i < sweep.rows.size(); ++i)
      g.require(sweep.rows[i - 1].bound >= 4.0 * (1.0 - 1e-12) * sweep.rows[i].bound,
                "constant bound must decrease by >= 4x per radius step");
  }
  {
    SolutionParams p;
    p.a = 1.0;
    p.domain = Rect{-70.0, 70.0, -4200.0, 4200.0};
    const HeatSolution u =
        make_closed_form(ClosedFormKind::TravelingWave, ModelManifold::euclidean(1), p);
    const auto sweep = gradient_decay_sweep_a(u, 0.0, 0.0, radii, 1.0);
    for (size_t i = 1; i < sweep.rows.size(); ++i)
      g.require(sweep.rows[i].bound >= sweep.rows[i - 1].bound,
                "wave bound must be nondecreasing");
    g.note("wave bounds: " + io::fmt(sweep.rows[0].bound) + " -> " +
           io::fmt(sweep.rows.back().bound));
  }
  {
    const HeatSolution u =
        make_eternal_affine(1.0, 0.0, Rect{-130.0, 130.0, -16.0, 16.0});
    const auto sweep = gradient_decay_sweep_b(u, 1.0, 0.0, radii, 1.0);
    g.require(sweep.max_log_sandwich <= std::log(3.0) + 1e-9,
              "sandwich ln(M_U/U) exceeded ln 3");
    g.require(sweep.rows.back().bound >= 1.0,
              "linear solution must keep a non-vanishing bound");
    g.note("affine final bound = " + io::fmt(sweep.rows.back().bound) +
           ", sandwich = " + io::fmt(sweep.max_log_sandwich));
  }
  return {9, "Liouville sweeps separate admissible from sharp examples", g.ok, g.detail,
          0.0};
}

CriterionResult criterion_10() {
  Gate g;
  for (const CorpusEntry& e : ratio_corpus()) {
    const EstimateReport base = report(EstimateId::SZ_1_4, e.u, e.cube, e.k, 1.0);
    const auto pts = interior_points(e.u, e.cube.half(), 5);
    for (double lambda : {0.1, 7.0}) {
      const HeatSolution v = e.u.scaled(lambda);
      const EstimateReport rs = report(EstimateId::SZ_1_4, v, e.cube, e.k, 1.0);
      auto close = [](double a, double b) {
        return std::abs(a - b) <= 1e-12 * std::max({std::abs(a), std::abs(b), 1e-30});
      };
      g.require(close(base.ratio, rs.ratio),
                e.u.name() + ": ratio moved under scaling by " + io::fmt(lambda));
      g.require(close(base.lhs_sup, rs.lhs_sup),
                e.u.name() + ": lhs_sup moved under scaling");
      for (const auto& [x, t] : pts) {
        g.require(close(evaluate_lhs(EstimateId::SZ_1_4, e.u, x, t),
                        evaluate_lhs(EstimateId::SZ_1_4, v, x, t)),
                  e.u.name() + ": pointwise LHS moved under scaling");
        g.require(close(evaluate_lhs(EstimateId::LY_1_2, e.u, x, t),
                        evaluate_lhs(EstimateId::LY_1_2, v, x, t)),
                  e.u.name() + ": parabolic LHS moved under scaling");
      }
    }
  }
  return {10, "scale invariance of all reported quantities", g.ok, g.detail, 0.0};
}

CriterionResult criterion_11() {
  Gate g;
  const auto corpus = ratio_corpus();
  double c_hat = 0.0;
  for (const CorpusEntry& e : corpus)
    c_hat = std::max(c_hat, report(EstimateId::SZ_1_4, e.u, e.cube, e.k, 1.0).ratio);
  g.require(c_hat > 0.0 && std::isfinite(c_hat), "empirical constant must be finite");
  for (const CorpusEntry& e : corpus) {
    const double r = report(EstimateId::SZ_1_4, e.u, e.cube, e.k, c_hat).ratio;
    g.require(r <= 1.0 + 1e-9,
              e.u.name() + ": ratio " + io::fmt(r) + " > 1 at the calibrated constant");
  }
  g.note("c_hat = " + io::fmt(c_hat));
  return {11, "empirical constant closes the corpus", g.ok, g.detail, 0.0};
}

}  // namespace

std::vector<CriterionResult> run_all() {
  using Fn = CriterionResult (*)();
  const Fn criteria[] = {criterion_1, criterion_2, criterion_3, criterion_4,
                         criterion_5, criterion_6, criterion_7, criterion_8,
                         criterion_9, criterion_10, criterion_11};
  const double limits[] = {1, 1, 10, 2, 1, 1, 2, 30, 5, 5, 10};

  std::vector<CriterionResult> results;
  for (size_t i = 0; i < std::size(criteria); ++i) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = criteria[i]();
    } catch (const std::exception& ex) {
      r.id = static_cast<int>(i) + 1;
      r.name = "criterion " + std::to_string(i + 1);
      r.passed = false;
      r.detail = std::string("exception: ") + ex.what();
      results.push_back(r);
      continue;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
    if (r.seconds > limits[i]) {
      r.passed = false;
      r.detail += (r.detail.empty() ? "" : "; ") + std::string("FAILED: runtime ") +
                  io::fmt(r.seconds) + " s exceeds " + io::fmt(limits[i]) + " s";
    }
    results.push_back(r);
  }
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

void print_table(std::ostream& os, const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name;
    if (!r.detail.empty()) os << " -- " << r.detail;
    os << " (" << io::fmt(r.seconds) << " s)\n";
  }
  int passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  os << passed << "/" << results.size() << " criteria passed\n";
}

std::string to_json(const std::vector<CriterionResult>& results) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["name"] = r.name;
    j["passed"] = r.passed;
    j["detail"] = r.detail;
    j["seconds"] = r.seconds;
    arr.push_back(j);
  }
  nlohmann::ordered_json top;
  top["schema"] = 1;
  top["criteria"] = arr;
  return top.dump(2) + "\n";
}

}  // namespace heatlab::acceptance
