#include "heatlab/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "heatlab/io.hpp"

namespace heatlab {

namespace {

constexpr double kSupSafetyLog = 9.995003330835332e-4;  // ln(1.001)

double halton(int index, int base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * (index % base);
    index /= base;
  }
  return r;
}

}  // namespace

int GridData::snap_r(double x) const {
  const int i = static_cast<int>(std::lround((x - r_lo) / h));
  return std::clamp(i, 0, nr - 1);
}

int GridData::snap_t(double t) const {
  const int m = static_cast<int>(std::lround((t - t_lo) / tau));
  return std::clamp(m, 0, nt - 1);
}

// ---------------------------------------------------------------------------
// Implementation record
// ---------------------------------------------------------------------------

struct HeatSolution::Impl {
  ModelManifold manifold = ModelManifold::euclidean(1);
  Form form = Form::Analytic;
  std::string name;
  Rect domain;
  bool positive = true;
  bool solves_heat = true;
  std::vector<std::string> notes;

  // Analytic evaluators. Positive forms are defined through `log_jet`;
  // sign-changing fixtures through `value_jet`.
  std::function<Jet(double, double)> log_jet;
  std::function<Jet(double, double)> value_jet;
  // Closed-form maximization of ln u over a cube, when the form is monotone
  // enough to admit one.
  std::function<double(const Rect&)> exact_log_sup;

  std::shared_ptr<const GridData> grid;
};

HeatSolution::HeatSolution(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

const ModelManifold& HeatSolution::manifold() const { return impl_->manifold; }
HeatSolution::Form HeatSolution::form() const { return impl_->form; }
const std::string& HeatSolution::name() const { return impl_->name; }
const Rect& HeatSolution::domain() const { return impl_->domain; }
bool HeatSolution::radial() const { return impl_->manifold.dim() >= 2; }
bool HeatSolution::positive() const { return impl_->positive; }
bool HeatSolution::solves_heat() const { return impl_->solves_heat; }
const std::vector<std::string>& HeatSolution::notes() const { return impl_->notes; }
const GridData* HeatSolution::grid() const { return impl_->grid.get(); }

// ---------------------------------------------------------------------------
// Grid stencils
// ---------------------------------------------------------------------------

namespace {

Jet grid_value_jet(const GridData& g, double x, double t) {
  const int i = g.snap_r(x);
  const int m = g.snap_t(t);
  if (i <= 0 || i >= g.nr - 1 || m < 0 || m > g.nt - 1)
    throw DomainError("grid jet: point too close to the spatial boundary");
  auto U = [&](int ii, int mm) { return g.at(ii, mm); };
  const double h = g.h, tau = g.tau;

  Jet j;
  j.v = U(i, m);
  j.dr = (U(i + 1, m) - U(i - 1, m)) / (2 * h);
  j.drr = (U(i + 1, m) - 2 * U(i, m) + U(i - 1, m)) / (h * h);
  if (i >= 2 && i <= g.nr - 3) {
    j.drrr = (-U(i - 2, m) + 2 * U(i - 1, m) - 2 * U(i + 1, m) + U(i + 2, m)) /
             (2 * h * h * h);
  } else if (i == 1) {
    j.drrr = (U(3, m) - 3 * U(2, m) + 3 * U(1, m) - U(0, m)) / (h * h * h);
  } else {  // i == nr - 2
    j.drrr = (U(g.nr - 1, m) - 3 * U(g.nr - 2, m) + 3 * U(g.nr - 3, m) - U(g.nr - 4, m)) /
             (h * h * h);
  }

  auto dt_at = [&](int ii) {
    if (m >= 1 && m <= g.nt - 2)
      return (U(ii, m + 1) - U(ii, m - 1)) / (2 * tau);
    if (m == 0)
      return (-3 * U(ii, 0) + 4 * U(ii, 1) - U(ii, 2)) / (2 * tau);
    return (3 * U(ii, m) - 4 * U(ii, m - 1) + U(ii, m - 2)) / (2 * tau);
  };
  j.dt = dt_at(i);
  j.drt = (dt_at(i + 1) - dt_at(i - 1)) / (2 * h);
  return j;
}

}  // namespace

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

Jet HeatSolution::value_jet(double x, double t) const {
  if (impl_->form == Form::Grid) return grid_value_jet(*impl_->grid, x, t);
  if (impl_->value_jet) return impl_->value_jet(x, t);
  return heatlab::exp(impl_->log_jet(x, t));
}

Jet HeatSolution::log_jet(double x, double t) const {
  if (impl_->form == Form::Analytic && impl_->log_jet) return impl_->log_jet(x, t);
  const Jet u = value_jet(x, t);
  if (!(u.v > 0.0))
    throw DomainError(impl_->name + ": log requested where u <= 0");
  return heatlab::log(u);
}

double HeatSolution::value(double x, double t) const {
  if (impl_->form == Form::Grid) return impl_->grid->at(impl_->grid->snap_r(x), impl_->grid->snap_t(t));
  if (impl_->value_jet) return impl_->value_jet(x, t).v;
  return std::exp(impl_->log_jet(x, t).v);
}

double HeatSolution::log_value(double x, double t) const {
  if (impl_->form == Form::Analytic && impl_->log_jet) return impl_->log_jet(x, t).v;
  const double u = value(x, t);
  if (!(u > 0.0)) throw DomainError(impl_->name + ": log requested where u <= 0");
  return std::log(u);
}

double HeatSolution::log_sup(const ParabolicCube& cube, int nx, int nt) const {
  const Rect box = cube_box(*this, cube);
  if (impl_->exact_log_sup) return impl_->exact_log_sup(box);

  if (impl_->form == Form::Grid) {
    const GridData& g = *impl_->grid;
    const int i0 = g.snap_r(box.x_lo), i1 = g.snap_r(box.x_hi);
    const int m0 = g.snap_t(box.t_lo), m1 = g.snap_t(box.t_hi);
    double best = -std::numeric_limits<double>::infinity();
    for (int m = m0; m <= m1; ++m)
      for (int i = i0; i <= i1; ++i) best = std::max(best, g.at(i, m));
    if (!(best > 0.0)) throw DomainError("grid solution not positive on the cube");
    return std::log(best);
  }

  double best = -std::numeric_limits<double>::infinity();
  for (int m = 0; m < nt; ++m) {
    const double t = box.t_lo + (box.t_hi - box.t_lo) * m / (nt - 1);
    for (int i = 0; i < nx; ++i) {
      const double x = box.x_lo + (box.x_hi - box.x_lo) * i / (nx - 1);
      best = std::max(best, log_value(x, t));
    }
  }
  return best + kSupSafetyLog;
}

double HeatSolution::sup_abs(const ParabolicCube& cube, int nx, int nt) const {
  const Rect box = cube_box(*this, cube);
  if (impl_->positive) return std::exp(log_sup(cube, nx, nt));
  double best = 0.0;
  for (int m = 0; m < nt; ++m) {
    const double t = box.t_lo + (box.t_hi - box.t_lo) * m / (nt - 1);
    for (int i = 0; i < nx; ++i) {
      const double x = box.x_lo + (box.x_hi - box.x_lo) * i / (nx - 1);
      best = std::max(best, std::abs(value(x, t)));
    }
  }
  return best;
}

double HeatSolution::log_floor(int nx, int nt) const {
  if (impl_->form == Form::Grid) {
    const double lo = std::min(impl_->grid->min_interior, impl_->grid->min_boundary);
    return lo > 0.0 ? std::log(lo) : -std::numeric_limits<double>::infinity();
  }
  double worst = std::numeric_limits<double>::infinity();
  const Rect& d = impl_->domain;
  for (int m = 0; m < nt; ++m) {
    const double t = d.t_lo + (d.t_hi - d.t_lo) * m / (nt - 1);
    for (int i = 0; i < nx; ++i) {
      const double x = d.x_lo + (d.x_hi - d.x_lo) * i / (nx - 1);
      if (impl_->positive) {
        worst = std::min(worst, log_value(x, t));
      } else {
        const double u = value(x, t);
        if (!(u > 0.0)) return -std::numeric_limits<double>::infinity();
        worst = std::min(worst, std::log(u));
      }
    }
  }
  return worst;
}

HeatSolution HeatSolution::scaled(double lambda) const {
  if (!(lambda > 0.0)) throw ConstructionError("scaling factor must be positive");
  auto impl = std::make_shared<Impl>(*impl_);
  impl->name = impl_->name + "*" + io::fmt(lambda);
  const double shift = std::log(lambda);
  if (impl_->form == Form::Grid) {
    auto g = std::make_shared<GridData>(*impl_->grid);
    for (double& v : g->u) v *= lambda;
    g->min_interior *= lambda;
    g->min_boundary *= lambda;
    impl->grid = std::move(g);
  } else {
    if (impl_->log_jet) {
      auto base = impl_->log_jet;
      impl->log_jet = [base, shift](double x, double t) {
        Jet j = base(x, t);
        j.v += shift;
        return j;
      };
    }
    if (impl_->value_jet) {
      auto base = impl_->value_jet;
      impl->value_jet = [base, lambda](double x, double t) { return base(x, t) * lambda; };
    }
    if (impl_->exact_log_sup) {
      auto base = impl_->exact_log_sup;
      impl->exact_log_sup = [base, shift](const Rect& r) { return base(r) + shift; };
    }
  }
  return HeatSolution(std::move(impl));
}

std::string HeatSolution::to_csv() const {
  if (impl_->form != Form::Grid)
    throw MisuseError("CSV serialization is defined for grid solutions");
  const GridData& g = *impl_->grid;
  std::string out = "r,t,u\n";
  for (int m = 0; m < g.nt; ++m)
    for (int i = 0; i < g.nr; ++i) {
      out += io::fmt(g.r_of(i));
      out += ',';
      out += io::fmt(g.t_of(m));
      out += ',';
      out += io::fmt(g.at(i, m));
      out += '\n';
    }
  return out;
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

namespace {

std::shared_ptr<HeatSolution::Impl> base_impl(const ModelManifold& M, std::string name,
                                              const Rect& domain) {
  auto impl = std::make_shared<HeatSolution::Impl>();
  impl->manifold = M;
  impl->name = std::move(name);
  impl->domain = domain;
  return impl;
}

}  // namespace

HeatSolution make_closed_form(ClosedFormKind kind, const ModelManifold& M,
                              const SolutionParams& params) {
  const Rect& d = params.domain;
  if (d.x_hi <= d.x_lo || d.t_hi <= d.t_lo)
    throw ConstructionError("solution domain must be a nonempty rectangle");

  switch (kind) {
    case ClosedFormKind::GaussianKernel: {
      if (M.kind() != ManifoldKind::Euclidean)
        throw ConstructionError("gaussian kernel requires a Euclidean model");
      if (d.t_lo <= 0.0)
        throw ConstructionError("gaussian kernel requires t > 0");
      const int n = M.dim();
      if (n >= 2 && d.x_lo < 0.0)
        throw ConstructionError("radial coordinate must be nonnegative");
      auto impl = base_impl(M, "gaussian_kernel(n=" + std::to_string(n) + ")", d);
      impl->log_jet = [n](double x, double t) {
        const Jet X = Jet::space(x), T = Jet::time(t);
        return Jet::constant(-0.5 * n) * log(T * (4.0 * M_PI)) - X * X / (4.0 * T);
      };
      impl->exact_log_sup = [n](const Rect& box) {
        const double r = (box.x_lo <= 0.0 && box.x_hi >= 0.0)
                             ? 0.0
                             : std::min(std::abs(box.x_lo), std::abs(box.x_hi));
        const double t = std::clamp(r * r / (2.0 * n), box.t_lo, box.t_hi);
        return -0.5 * n * std::log(4.0 * M_PI * t) - r * r / (4.0 * t);
      };
      return HeatSolution(impl);
    }

    case ClosedFormKind::TravelingWave: {
      if (M.kind() != ManifoldKind::Euclidean || M.dim() != 1)
        throw ConstructionError("traveling wave lives on the Euclidean line");
      const double a = params.a;
      auto impl = base_impl(M, "traveling_wave(a=" + io::fmt(a) + ")", d);
      if (a <= 0.0)
        impl->notes.push_back("nonpositive slope: sharpness sweeps assume a > 0");
      impl->log_jet = [a](double x, double t) {
        return Jet::space(x) * a + Jet::time(t) * (a * a);
      };
      impl->exact_log_sup = [a](const Rect& box) {
        return a * (a > 0.0 ? box.x_hi : box.x_lo) + a * a * box.t_hi;
      };
      return HeatSolution(impl);
    }

    case ClosedFormKind::Linear: {
      if (M.kind() != ManifoldKind::Euclidean || M.dim() != 1)
        throw ConstructionError("the linear solution lives on the Euclidean line");
      if (d.x_lo <= 0.0)
        throw ConstructionError("linear solution needs a domain with x > 0");
      auto impl = base_impl(M, "linear", d);
      impl->log_jet = [](double x, double t) {
        (void)t;
        return log(Jet::space(x));
      };
      impl->exact_log_sup = [](const Rect& box) { return std::log(box.x_hi); };
      return HeatSolution(impl);
    }

    case ClosedFormKind::Hyperbolic3Kernel: {
      if (M.kind() != ManifoldKind::Hyperbolic || M.dim() != 3 ||
          std::abs(M.curvature() + 1.0) > 1e-14)
        throw ConstructionError("hyperbolic kernel fixture needs H^3, kappa = -1");
      if (d.t_lo <= 0.0)
        throw ConstructionError("heat kernel requires t > 0");
      if (d.x_lo < kPoleRadius)
        throw ConstructionError("hyperbolic kernel fixture is evaluated away from the pole");
      auto impl = base_impl(M, "hyperbolic3_kernel", d);
      impl->log_jet = [](double x, double t) {
        const Jet X = Jet::space(x), T = Jet::time(t);
        return Jet::constant(-1.5) * log(T * (4.0 * M_PI)) + log(X) - log(sinh(X)) -
               T - X * X / (4.0 * T);
      };
      return HeatSolution(impl);
    }

    case ClosedFormKind::Constant: {
      const double c = params.c;
      if (!(c > 0.0)) throw ConstructionError("constant solution must be positive");
      auto impl = base_impl(M, "constant(" + io::fmt(c) + ")", d);
      const double lc = std::log(c);
      impl->log_jet = [lc](double, double) { return Jet::constant(lc); };
      impl->exact_log_sup = [lc](const Rect&) { return lc; };
      return HeatSolution(impl);
    }
  }
  throw ConstructionError("unknown closed form kind");
}

HeatSolution make_torus_wave(const Rect& domain) {
  if (domain.t_lo < 0.0)
    throw ConstructionError("torus wave fixture starts at t >= 0");
  auto impl = base_impl(ModelManifold::euclidean(1), "torus_wave", domain);
  impl->value_jet = [](double x, double t) {
    return 2.0 + sin(Jet::space(x)) * exp(-Jet::time(t));
  };
  return HeatSolution(impl);
}

HeatSolution make_exp_radial(const ModelManifold& M, double b, const Rect& domain) {
  if (M.dim() >= 2 && domain.x_lo < kPoleRadius)
    throw ConstructionError("exp_radial fixture is evaluated away from the pole");
  auto impl = base_impl(M, "exp_radial(b=" + io::fmt(b) + ")", domain);
  impl->solves_heat = false;
  impl->notes.push_back("static fixture: not a heat solution");
  impl->log_jet = [b](double x, double t) {
    (void)t;
    return Jet::space(x) * b;
  };
  impl->exact_log_sup = [b](const Rect& box) {
    return b * (b > 0.0 ? box.x_hi : box.x_lo);
  };
  return HeatSolution(impl);
}

HeatSolution make_decaying_sine(double amplitude, double t_ref, const Rect& domain) {
  if (!(amplitude > 0.0)) throw ConstructionError("amplitude must be positive");
  auto impl = base_impl(ModelManifold::euclidean(1),
                        "decaying_sine(amp=" + io::fmt(amplitude) + ")", domain);
  impl->positive = false;
  impl->value_jet = [amplitude, t_ref](double x, double t) {
    return sin(Jet::space(x)) * exp(Jet::constant(t_ref) - Jet::time(t)) * amplitude;
  };
  return HeatSolution(impl);
}

HeatSolution make_static_sine(double amplitude, const Rect& domain) {
  if (!(amplitude > 0.0)) throw ConstructionError("amplitude must be positive");
  auto impl = base_impl(ModelManifold::euclidean(1),
                        "static_sine(amp=" + io::fmt(amplitude) + ")", domain);
  impl->positive = false;
  impl->solves_heat = false;
  impl->notes.push_back("static fixture: not a heat solution");
  impl->value_jet = [amplitude](double x, double t) {
    (void)t;
    return sin(Jet::space(x)) * amplitude;
  };
  return HeatSolution(impl);
}

HeatSolution make_eternal_affine(double slope, double intercept, const Rect& domain) {
  auto impl = base_impl(ModelManifold::euclidean(1),
                        "affine(" + io::fmt(slope) + "x+" + io::fmt(intercept) + ")",
                        domain);
  impl->positive = slope * domain.x_lo + intercept > 0.0 &&
                   slope * domain.x_hi + intercept > 0.0;
  impl->value_jet = [slope, intercept](double x, double t) {
    (void)t;
    return Jet::space(x) * slope + intercept;
  };
  return HeatSolution(impl);
}

// ---------------------------------------------------------------------------
// Crank-Nicolson radial solver
// ---------------------------------------------------------------------------

HeatSolution solve_radial_heat(const ModelManifold& M,
                               const std::function<double(double)>& initial,
                               const std::function<double(double)>& boundary_lo,
                               const std::function<double(double)>& boundary_hi,
                               const GridSpec& spec) {
  if (spec.nr < 5 || spec.nt < 3)
    throw ConstructionError("solver grid needs at least 5 x 3 nodes");
  if (spec.r_hi <= spec.r_lo || spec.t_hi <= spec.t_lo)
    throw ConstructionError("solver grid must be a nonempty rectangle");
  if (M.dim() >= 2 && spec.r_lo < kPoleRadius)
    throw ConstructionError("solver domain must stay away from the pole");

  auto g = std::make_shared<GridData>();
  g->r_lo = spec.r_lo;
  g->r_hi = spec.r_hi;
  g->t_lo = spec.t_lo;
  g->t_hi = spec.t_hi;
  g->nr = spec.nr;
  g->nt = spec.nt;
  g->h = (spec.r_hi - spec.r_lo) / (spec.nr - 1);
  g->tau = (spec.t_hi - spec.t_lo) / (spec.nt - 1);
  g->u.assign(static_cast<size_t>(spec.nr) * spec.nt, 0.0);

  const int nr = g->nr, nt = g->nt;
  const double h = g->h, tau = g->tau;

  for (int i = 0; i < nr; ++i) {
    const double v = initial(g->r_of(i));
    if (!(v > 0.0))
      throw ConstructionError("initial data must be positive");
    g->u[i] = v;
  }
  auto check_corner = [&](double bc, double init, const char* side) {
    if (std::abs(bc - init) > 1e-9 * std::max(1.0, std::abs(init)))
      throw ConstructionError(std::string("boundary/initial data incompatible at the ") +
                              side + " corner");
  };
  check_corner(boundary_lo(g->t_lo), g->u[0], "lower");
  check_corner(boundary_hi(g->t_lo), g->u[nr - 1], "upper");

  std::vector<double> drift(nr, 0.0);
  for (int i = 0; i < nr; ++i) drift[i] = M.dim() >= 2 ? M.drift(g->r_of(i)) : 0.0;

  const double alpha = 0.5 * tau;
  std::vector<double> sub(nr, 0.0), diag(nr, 0.0), sup(nr, 0.0), rhs(nr, 0.0);
  std::vector<double> cp(nr, 0.0), dp(nr, 0.0);

  for (int m = 0; m + 1 < nt; ++m) {
    const double* uo = &g->u[static_cast<size_t>(m) * nr];
    double* un = &g->u[static_cast<size_t>(m + 1) * nr];
    const double t_next = g->t_of(m + 1);
    const double bl = boundary_lo(t_next), bh = boundary_hi(t_next);
    if (!(bl > 0.0) || !(bh > 0.0))
      throw ConstructionError("boundary data must be positive");

    for (int i = 1; i + 1 < nr; ++i) {
      const double lo_w = 1.0 / (h * h) - drift[i] / (2.0 * h);
      const double hi_w = 1.0 / (h * h) + drift[i] / (2.0 * h);
      const double lap = lo_w * uo[i - 1] - 2.0 / (h * h) * uo[i] + hi_w * uo[i + 1];
      rhs[i] = uo[i] + alpha * lap;
      sub[i] = -alpha * lo_w;
      diag[i] = 1.0 + 2.0 * alpha / (h * h);
      sup[i] = -alpha * hi_w;
    }
    rhs[1] -= sub[1] * bl;
    rhs[nr - 2] -= sup[nr - 2] * bh;

    // Thomas sweep over i = 1 .. nr-2.
    cp[1] = sup[1] / diag[1];
    dp[1] = rhs[1] / diag[1];
    for (int i = 2; i + 1 < nr; ++i) {
      const double den = diag[i] - sub[i] * cp[i - 1];
      cp[i] = sup[i] / den;
      dp[i] = (rhs[i] - sub[i] * dp[i - 1]) / den;
    }
    un[nr - 2] = dp[nr - 2];
    for (int i = nr - 3; i >= 1; --i) un[i] = dp[i] - cp[i] * un[i + 1];
    un[0] = bl;
    un[nr - 1] = bh;

    for (int i = 0; i < nr; ++i)
      if (!(un[i] > 0.0))
        throw PositivityError("scheme produced a non-positive value", g->r_of(i), t_next);
  }

  double min_b = std::numeric_limits<double>::infinity();
  for (int i = 0; i < nr; ++i) min_b = std::min(min_b, g->u[i]);
  for (int m = 1; m < nt; ++m) {
    min_b = std::min(min_b, g->at(0, m));
    min_b = std::min(min_b, g->at(nr - 1, m));
  }
  double min_i = std::numeric_limits<double>::infinity();
  for (int m = 1; m < nt; ++m)
    for (int i = 1; i + 1 < nr; ++i) min_i = std::min(min_i, g->at(i, m));
  g->min_boundary = min_b;
  g->min_interior = min_i;

  auto impl = base_impl(M, "grid(" + M.name() + ")",
                        Rect{spec.r_lo, spec.r_hi, spec.t_lo, spec.t_hi});
  impl->form = HeatSolution::Form::Grid;
  impl->grid = std::move(g);
  return HeatSolution(impl);
}

// ---------------------------------------------------------------------------
// Residual and sampling helpers
// ---------------------------------------------------------------------------

double heat_residual(const HeatSolution& u, double x, double t) {
  if (!u.domain().contains(x, t))
    throw DomainError("heat_residual: point outside the working domain");

  if (u.form() == HeatSolution::Form::Grid) {
    const GridData& g = *u.grid();
    const int i = g.snap_r(x), m = g.snap_t(t);
    if (i < 1 || i > g.nr - 2 || m < 1 || m > g.nt - 2)
      throw DomainError("heat_residual: grid point too close to the boundary");
    const double c = u.manifold().dim() >= 2 ? u.manifold().drift(g.r_of(i)) : 0.0;
    const double lap = (g.at(i + 1, m) - 2 * g.at(i, m) + g.at(i - 1, m)) / (g.h * g.h) +
                       c * (g.at(i + 1, m) - g.at(i - 1, m)) / (2 * g.h);
    const double ut = (g.at(i, m + 1) - g.at(i, m - 1)) / (2 * g.tau);
    return lap - ut;
  }

  const double xe = u.radial() ? std::max(x, kPoleRadius) : x;
  if (u.positive()) {
    const Jet f = u.log_jet(xe, t);
    const double lap_f = u.manifold().laplacian(f.drr, f.dr, xe);
    return std::exp(f.v) * (lap_f + f.dr * f.dr - f.dt);
  }
  const Jet v = u.value_jet(xe, t);
  return u.manifold().laplacian(v.drr, v.dr, xe) - v.dt;
}

Rect cube_box(const HeatSolution& u, const ParabolicCube& cube) {
  Rect box{cube.x_lo(), cube.x_hi(), cube.t_lo(), cube.t_hi()};
  if (u.radial()) box.x_lo = std::max(box.x_lo, 0.0);
  if (!u.domain().contains(box))
    throw DomainError(u.name() + ": cube leaves the working domain");
  return box;
}

std::vector<std::pair<double, double>> interior_points(const HeatSolution& u,
                                                       const ParabolicCube& cube,
                                                       int count, unsigned seed,
                                                       double margin) {
  const Rect box = cube_box(u, cube);
  std::vector<std::pair<double, double>> pts;
  pts.reserve(count);
  const double wx = box.x_hi - box.x_lo;
  const double wt = box.t_hi - box.t_lo;
  const int offset = 1 + static_cast<int>(seed) * 1009;
  for (int j = 0; j < count; ++j) {
    double x = box.x_lo + wx * (margin + (1.0 - 2.0 * margin) * halton(offset + j, 2));
    const double t = box.t_lo + wt * (margin + (1.0 - 2.0 * margin) * halton(offset + j, 3));
    if (u.radial()) x = std::max(x, kPoleRadius);
    pts.emplace_back(x, t);
  }
  return pts;
}

}  // namespace heatlab
