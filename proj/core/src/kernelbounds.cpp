#include "heatlab/kernelbounds.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace heatlab {

namespace {

// ln(d / sinh d), stable near zero.
double log_d_over_sinh(double d) {
  if (d < 1e-4) return -d * d / 6.0;
  return std::log(d) - std::log(std::sinh(d));
}

// coth d - 1/d, stable near zero.
double coth_minus_inv(double d) {
  if (d < 1e-4) return d / 3.0;
  return 1.0 / std::tanh(d) - 1.0 / d;
}

std::vector<double> grid_or_unit(std::span<const double> t_grid) {
  if (t_grid.empty()) return {1.0};
  return {t_grid.begin(), t_grid.end()};
}

}  // namespace

HeatKernel HeatKernel::euclidean(int n) {
  return HeatKernel(ModelManifold::euclidean(n), "euclidean(n=" + std::to_string(n) + ")",
                    true);
}

HeatKernel HeatKernel::hyperbolic3() {
  return HeatKernel(ModelManifold::hyperbolic(3, -1.0), "hyperbolic3", false);
}

double HeatKernel::log_G(double d, double t) const {
  if (t <= 0.0) throw DomainError("heat kernel needs t > 0");
  if (d < 0.0) throw DomainError("distance must be nonnegative");
  const int n = M_.dim();
  if (M_.kind() == ManifoldKind::Euclidean)
    return -0.5 * n * std::log(4.0 * M_PI * t) - d * d / (4.0 * t);
  return -1.5 * std::log(4.0 * M_PI * t) + log_d_over_sinh(d) - t - d * d / (4.0 * t);
}

double HeatKernel::grad_ratio(double d, double t) const {
  if (t <= 0.0) throw DomainError("heat kernel needs t > 0");
  if (d < 0.0) throw DomainError("distance must be nonnegative");
  if (M_.kind() == ManifoldKind::Euclidean) return d / (2.0 * t);
  return coth_minus_inv(d) + d / (2.0 * t);
}

HeatSolution HeatKernel::as_solution(const Rect& domain) const {
  SolutionParams p;
  p.domain = domain;
  if (M_.kind() == ManifoldKind::Euclidean)
    return make_closed_form(ClosedFormKind::GaussianKernel, M_, p);
  return make_closed_form(ClosedFormKind::Hyperbolic3Kernel, M_, p);
}

std::vector<double> default_xi_grid(double xi_max) {
  std::vector<double> grid;
  const double step = 1.0 / 64.0;
  const int count = static_cast<int>(std::floor(xi_max / step)) + 1;
  grid.reserve(count);
  for (int i = 0; i < count; ++i) grid.push_back(i * step);
  return grid;
}

KernelBoundReport li_yau_constants(const HeatKernel& K, double delta,
                                   std::span<const double> xi_grid,
                                   std::span<const double> t_grid) {
  if (!(delta > 0.0) || delta >= 4.0)
    throw PreconditionError("li_yau_constants needs delta in (0, 4)");
  const std::vector<double> ts = grid_or_unit(t_grid);

  KernelBoundReport rep;
  rep.model = K.name();
  rep.delta = delta;
  double log_c1 = -std::numeric_limits<double>::infinity();
  double log_c2 = std::numeric_limits<double>::infinity();
  for (double t : ts) {
    const double log_vol = std::log(ball_volume(K.manifold(), std::sqrt(t)));
    for (double xi : xi_grid) {
      const double d = std::sqrt(xi * t);
      const double base = K.log_G(d, t) + log_vol;
      log_c1 = std::max(log_c1, base + xi * t / ((4.0 + delta) * t));
      log_c2 = std::min(log_c2, base + xi * t / ((4.0 - delta) * t));
    }
  }
  rep.c1 = std::exp(log_c1);
  rep.c2 = std::exp(log_c2);
  rep.grad_ratio_sup = kernel_gradient_check(K, xi_grid, t_grid);
  return rep;
}

double kernel_gradient_check(const HeatKernel& K, std::span<const double> xi_grid,
                             std::span<const double> t_grid) {
  const std::vector<double> ts = grid_or_unit(t_grid);
  double sup = 0.0;
  for (double t : ts)
    for (double xi : xi_grid) {
      const double d = std::sqrt(xi * t);
      sup = std::max(sup, K.grad_ratio(d, t) * std::sqrt(t) / (1.0 + xi));
    }
  return sup;
}

io::Csv kernel_gradient_sweep_csv(const HeatKernel& K, std::span<const double> xi_grid,
                                  std::span<const double> t_grid) {
  const std::vector<double> ts = grid_or_unit(t_grid);
  io::Csv csv;
  csv.header = {"xi", "t", "lhs", "rhs", "ratio"};
  for (double t : ts)
    for (double xi : xi_grid) {
      const double d = std::sqrt(xi * t);
      const double lhs = K.grad_ratio(d, t);
      const double rhs = (1.0 + xi) / std::sqrt(t);
      csv.add_row({io::fmt(xi), io::fmt(t), io::fmt(lhs), io::fmt(rhs),
                   io::fmt(lhs / rhs)});
    }
  return csv;
}

std::string KernelBoundReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["model"] = model;
  j["delta"] = delta;
  j["c1"] = c1;
  j["c2"] = c2;
  j["grad_ratio_sup"] = grad_ratio_sup;
  return j.dump(2) + "\n";
}

double euclidean_exact_ratio(int n, double d, double t) {
  if (t <= 0.0) throw DomainError("euclidean_exact_ratio needs t > 0");
  if (d < 0.0) throw DomainError("distance must be nonnegative");
  const double expected = d / (2.0 * t);
  const double computed = HeatKernel::euclidean(n).grad_ratio(d, t);
  if (std::abs(computed - expected) > 1e-12 * std::max(1.0, expected))
    throw Error("euclidean kernel gradient ratio drifted from d/(2t)");
  return expected;
}

// ---------------------------------------------------------------------------
// Proof replay for the kernel-gradient bound
// ---------------------------------------------------------------------------

Thm13Trace thm13_pipeline(const HeatKernel& K, double d, double t, double delta) {
  if (K.manifold().ricci_bound() != 0.0)
    throw MisuseError("thm13_pipeline requires a nonnegative-Ricci model");
  if (t <= 0.0) throw DomainError("thm13_pipeline needs t > 0");
  if (d < 0.0) throw DomainError("distance must be nonnegative");

  const ModelManifold& M = K.manifold();
  const double sqrt_t = std::sqrt(t);

  Thm13Trace trace;
  trace.d = d;
  trace.t = t;
  trace.delta = delta;
  trace.xi = d * d / t;

  // The kernel, restricted to a box covering B(x, sqrt t) x [t/2, t].
  Rect domain;
  domain.x_lo = M.dim() >= 2 ? std::max(0.0, d - sqrt_t) : d - sqrt_t;
  domain.x_hi = d + sqrt_t;
  domain.t_lo = 0.5 * t * (1.0 - 1e-12);
  domain.t_hi = 2.0 * t;  // room for evaluate_rhs of the instantaneous form
  const HeatSolution u = K.as_solution(domain);
  const ParabolicCube cube(d, sqrt_t, t, 0.5 * t);

  trace.log_M = u.log_sup(cube);

  // Two-sided kernel constants; the grid is extended by the cube's own
  // (xi, t) points so the measured constants genuinely cover this cube.
  const double xi_need = (d + sqrt_t) * (d + sqrt_t) / (0.5 * t);
  std::vector<double> xi_grid = default_xi_grid(std::max(100.0, xi_need * 1.05));
  std::vector<double> t_grid;
  if (!K.self_similar())
    for (int i = 0; i <= 32; ++i) t_grid.push_back(0.5 * t + 0.5 * t * i / 32.0);
  KernelBoundReport li = li_yau_constants(K, delta, xi_grid, t_grid);

  double log_c1 = std::log(li.c1), log_c2 = std::log(li.c2);
  {
    // Include the cube lattice and the evaluation point in the measurement.
    const Rect box = cube_box(u, cube);
    for (int m = 0; m <= 32; ++m) {
      const double tt = box.t_lo + (box.t_hi - box.t_lo) * m / 32.0;
      const double log_vol = std::log(ball_volume(M, std::sqrt(tt)));
      for (int i = 0; i <= 64; ++i) {
        const double z = box.x_lo + (box.x_hi - box.x_lo) * i / 64.0;
        const double dist = std::abs(z);
        const double base = K.log_G(dist, tt) + log_vol;
        log_c1 = std::max(log_c1, base + dist * dist / ((4.0 + delta) * tt));
      }
    }
    const double base_pt = K.log_G(d, t) + std::log(ball_volume(M, sqrt_t));
    log_c2 = std::min(log_c2, base_pt + d * d / ((4.0 - delta) * t));
  }
  trace.c1 = std::exp(log_c1);
  trace.c2 = std::exp(log_c2);

  // Volume doubling for radius factor 2 at the smallest ball in the chain.
  const double r0 = std::sqrt(0.5 * t);
  trace.doubling = ball_volume(M, 2.0 * r0) / ball_volume(M, r0);
  trace.c3 = trace.c1 * trace.doubling;

  // Localized gradient estimate, calibrated on this cube.
  const EstimateReport rep = report(EstimateId::SZ_1_4, u, cube, 0.0, 1.0);
  trace.c_hat = rep.ratio;

  const double shape = (1.0 / cube.R + 1.0 / std::sqrt(cube.T));
  const double log_u_xt = u.log_value(d, t);
  trace.bound_direct = trace.c_hat * shape * (1.0 + trace.log_M - log_u_xt);

  trace.log_ratio_bound =
      std::log(trace.c3) - log_c2 + d * d / ((4.0 - delta) * t);
  trace.final_bound = trace.c_hat * shape * (1.0 + trace.log_ratio_bound);
  trace.c4 = trace.final_bound * sqrt_t / (1.0 + trace.xi);

  trace.lhs = K.grad_ratio(d, t);
  const double tol = 1.0 + 1e-9;
  trace.passed = trace.lhs <= trace.bound_direct * tol &&
                 trace.bound_direct <= trace.final_bound * tol &&
                 trace.lhs <= trace.final_bound * tol;
  return trace;
}

io::Csv Thm13Trace::csv() const {
  io::Csv out;
  out.header = {"step", "value"};
  out.add_row({"d", io::fmt(d)});
  out.add_row({"t", io::fmt(t)});
  out.add_row({"delta", io::fmt(delta)});
  out.add_row({"xi", io::fmt(xi)});
  out.add_row({"log_M", io::fmt(log_M)});
  out.add_row({"c1", io::fmt(c1)});
  out.add_row({"c2", io::fmt(c2)});
  out.add_row({"doubling", io::fmt(doubling)});
  out.add_row({"c3", io::fmt(c3)});
  out.add_row({"c_hat", io::fmt(c_hat)});
  out.add_row({"log_ratio_bound", io::fmt(log_ratio_bound)});
  out.add_row({"bound_direct", io::fmt(bound_direct)});
  out.add_row({"final_bound", io::fmt(final_bound)});
  out.add_row({"c4", io::fmt(c4)});
  out.add_row({"lhs", io::fmt(lhs)});
  out.add_row({"passed", passed ? "1" : "0"});
  return out;
}

}  // namespace heatlab
