#include "heatlab/proofcheck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace heatlab {

namespace {

double clamp_radial(const HeatSolution& u, double x) {
  return u.radial() ? std::max(x, kPoleRadius) : x;
}

}  // namespace

LogQuantities log_quantities(const HeatSolution& u, double log_M, double x, double t) {
  const double xe = clamp_radial(u, x);
  Jet f = u.log_jet(xe, t);
  f.v -= log_M;
  if (f.v > 1e-12 * std::max(1.0, std::abs(log_M)))
    throw DataError("log_quantities: u exceeds the supplied M at the point");

  LogQuantities q;
  q.f = f.v;
  q.f_r = f.dr;
  q.f_rr = f.drr;
  q.f_rrr = f.drrr;
  q.f_t = f.dt;
  q.f_rt = f.drt;
  q.grad_f = f.dr;

  const double s = 1.0 - q.f;  // >= 1
  const double s2 = s * s, s3 = s2 * s, s4 = s3 * s;
  q.w = q.f_r * q.f_r / s2;
  q.w_r = 2.0 * q.f_r * q.f_rr / s2 + 2.0 * q.f_r * q.f_r * q.f_r / s3;
  q.w_rr = 2.0 * (q.f_rr * q.f_rr + q.f_r * q.f_rrr) / s2 +
           10.0 * q.f_r * q.f_r * q.f_rr / s3 +
           6.0 * q.f_r * q.f_r * q.f_r * q.f_r / s4;
  q.w_t = 2.0 * q.f_r * q.f_rt / s2 + 2.0 * q.f_r * q.f_r * q.f_t / s3;

  const ModelManifold& M = u.manifold();
  q.lap_f = M.laplacian(q.f_rr, q.f_r, xe);
  q.lap_w = M.laplacian(q.w_rr, q.w_r, xe);
  return q;
}

double check_f_equation(const HeatSolution& u, double log_M,
                        std::span<const std::pair<double, double>> points) {
  double worst = 0.0;
  for (const auto& [x, t] : points) {
    const LogQuantities q = log_quantities(u, log_M, x, t);
    worst = std::max(worst, std::abs(q.lap_f + q.f_r * q.f_r - q.f_t));
  }
  return worst;
}

double check_gradient_consistency(const HeatSolution& u, double log_M,
                                  std::span<const std::pair<double, double>> points) {
  double worst = 0.0;
  for (const auto& [x, t] : points) {
    const LogQuantities q = log_quantities(u, log_M, x, t);
    const double s = 1.0 - q.f;
    // Route one: w = (grad ln(1-f))^2 differentiated as a square.
    const double g = q.f_r / s;
    const double g_r = q.f_rr / s + q.f_r * q.f_r / (s * s);
    const double direct = 2.0 * g * g_r;
    // Route two: the expanded display.
    const double expanded =
        2.0 * q.f_r * q.f_rr / (s * s) + 2.0 * q.f_r * q.f_r * q.f_r / (s * s * s);
    worst = std::max(worst, std::abs(direct - expanded));
  }
  return worst;
}

double check_w_identity(const HeatSolution& u, double log_M, double x, double t) {
  const double xe = clamp_radial(u, x);
  const LogQuantities q = log_quantities(u, log_M, xe, t);
  const ModelManifold& M = u.manifold();

  const double direct = q.lap_w - q.w_t;

  const double s = 1.0 - q.f;
  const double s2 = s * s, s3 = s2 * s, s4 = s3 * s;
  const double ang = M.angular_coeff(xe);
  const int n = M.dim();
  const double hess_sq =
      q.f_rr * q.f_rr + (n - 1) * (ang * q.f_r) * (ang * q.f_r);
  const double ric = M.ricci_rr(xe);
  const double fr2 = q.f_r * q.f_r;
  const double expanded = 2.0 * hess_sq / s2 + 2.0 * ric * fr2 / s2 +
                          6.0 * fr2 * fr2 / s4 + 8.0 * fr2 * q.f_rr / s3 -
                          4.0 * fr2 * q.f_rr / s2 - 2.0 * fr2 * fr2 / s3;
  return std::abs(direct - expanded);
}

BochnerTerm bochner_term(const ModelManifold& M, const HeatSolution& u, double log_M,
                         double x, double t) {
  if (M.kind() == ManifoldKind::Warped)
    throw UnsupportedError("bochner_term supports constant-curvature models only");
  const double xe = clamp_radial(u, x);
  const LogQuantities q = log_quantities(u, log_M, xe, t);

  const int n = M.dim();
  const double ang = M.angular_coeff(xe);
  const double drift = M.drift(xe);
  const double hess_sq =
      q.f_rr * q.f_rr + (n - 1) * (ang * q.f_r) * (ang * q.f_r);

  // (1/2) Delta |grad f|^2
  const double h_r = 2.0 * q.f_r * q.f_rr;
  const double h_rr = 2.0 * (q.f_rr * q.f_rr + q.f_r * q.f_rrr);
  const double half_lap_h = 0.5 * M.laplacian(h_rr, h_r, xe);

  // grad f . grad Delta f
  const double drift_r =
      n == 1 ? 0.0 : (n - 1) * (M.warp_d2(xe) / M.warp(xe) - ang * ang);
  const double dlapf = q.f_rrr + drift_r * q.f_r + drift * q.f_rr;

  BochnerTerm out;
  out.lhs = half_lap_h - hess_sq - q.f_r * dlapf;
  out.rhs = M.ricci_rr(xe) * q.f_r * q.f_r;
  out.gap = out.rhs + M.ricci_bound() * q.f_r * q.f_r;
  return out;
}

double check_key_inequality(const HeatSolution& u, double log_M, double k,
                            std::span<const std::pair<double, double>> points) {
  for (const auto& [x, t] : points) {
    const double f = u.log_value(clamp_radial(u, x), t) - log_M;
    if (f > 1e-12 * std::max(1.0, std::abs(log_M)))
      throw PreconditionError("check_key_inequality: f > 0 in the sample (M too small)");
  }
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& [x, t] : points) {
    const LogQuantities q = log_quantities(u, log_M, x, t);
    const double s = 1.0 - q.f;
    const double rhs = 2.0 * q.f / s * q.f_r * q.w_r + 2.0 * s * q.w * q.w -
                       2.0 * k * q.w;
    worst = std::min(worst, (q.lap_w - q.w_t) - rhs);
  }
  return worst;
}

double completing_square_min(const HeatSolution& u, double log_M,
                             std::span<const std::pair<double, double>> points) {
  double worst = std::numeric_limits<double>::infinity();
  const ModelManifold& M = u.manifold();
  const int n = M.dim();
  for (const auto& [x, t] : points) {
    const double xe = clamp_radial(u, x);
    const LogQuantities q = log_quantities(u, log_M, xe, t);
    const double s = 1.0 - q.f;
    const double s2 = s * s, s3 = s2 * s, s4 = s3 * s;
    const double ang = M.angular_coeff(xe);
    const double hess_sq =
        q.f_rr * q.f_rr + (n - 1) * (ang * q.f_r) * (ang * q.f_r);
    const double fr2 = q.f_r * q.f_r;
    worst = std::min(worst, 2.0 * hess_sq / s2 + 2.0 * fr2 * fr2 / s4 +
                                4.0 * fr2 * q.f_rr / s3);
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Cutoff
// ---------------------------------------------------------------------------

CutoffProfile::CutoffProfile(double R, double T, double a, int p, double x0, double t0)
    : R_(R), T_(T), a_(a), p_(p), x0_(x0), t0_(t0) {}

CutoffProfile build_cutoff(double R, double T, double a, int p, double x0, double t0) {
  if (R <= 0.0 || T <= 0.0) throw ConstructionError("cutoff needs R, T > 0");
  if (p < 4 || p % 2 != 0) throw ConstructionError("cutoff power p must be an even integer >= 4");
  const double a_max = 1.0 - 2.0 / p;
  if (!(a > 0.0) || a > a_max)
    throw ConstructionError("cutoff exponent must satisfy 0 < a <= 1 - 2/p = " +
                            io::fmt(a_max));
  return CutoffProfile(R, T, a, p, x0, t0);
}

void CutoffProfile::eval_space(double x, double& chi, double& chi_r,
                               double& chi_rr) const {
  const double r = std::abs(x - x0_);
  const double sgn = x >= x0_ ? 1.0 : -1.0;
  const double s = 2.0 * r / R_ - 1.0;
  const double ds = 2.0 * sgn / R_;
  if (s < 0.0) {
    chi = 1.0;
    chi_r = 0.0;
    chi_rr = 0.0;
  } else if (s <= 1.0) {
    const double b = 1.0 - s;
    chi = std::pow(b, p_);
    chi_r = -p_ * std::pow(b, p_ - 1) * ds;
    chi_rr = p_ * (p_ - 1) * std::pow(b, p_ - 2) * ds * ds;
  } else {
    chi = chi_r = chi_rr = 0.0;
  }
}

void CutoffProfile::eval_time(double t, double& eta, double& eta_t) const {
  const double back = t0_ - t;
  const double tau = (back - T_ / 4.0) / (0.75 * T_);
  if (tau < 0.0) {
    eta = 1.0;
    eta_t = 0.0;
  } else if (tau <= 1.0) {
    const double b = 1.0 - tau;
    eta = b * b;
    eta_t = 2.0 * b / (0.75 * T_);  // d tau/dt = -1/(0.75 T)
  } else {
    eta = eta_t = 0.0;
  }
}

double CutoffProfile::psi(double x, double t) const {
  double chi, cr, crr, eta, et;
  eval_space(x, chi, cr, crr);
  eval_time(t, eta, et);
  return chi * eta;
}

double CutoffProfile::psi_r(double x, double t) const {
  double chi, cr, crr, eta, et;
  eval_space(x, chi, cr, crr);
  eval_time(t, eta, et);
  return cr * eta;
}

double CutoffProfile::psi_rr(double x, double t) const {
  double chi, cr, crr, eta, et;
  eval_space(x, chi, cr, crr);
  eval_time(t, eta, et);
  return crr * eta;
}

double CutoffProfile::psi_t(double x, double t) const {
  double chi, cr, crr, eta, et;
  eval_space(x, chi, cr, crr);
  eval_time(t, eta, et);
  return chi * et;
}

CutoffProfile::Constants CutoffProfile::measure(int nx, int nt) const {
  Constants c;
  for (int m = 0; m < nt; ++m) {
    const double t = t0_ - T_ + T_ * m / (nt - 1);
    for (int i = 0; i < nx; ++i) {
      const double x = x0_ + R_ * i / (nx - 1);
      const double p = psi(x, t);
      if (!(p > 0.0)) continue;
      const double pa = std::pow(p, a_);
      const double ps = std::sqrt(p);
      const double pr = std::abs(psi_r(x, t));
      c.r1 = std::max(c.r1, R_ * pr / pa);
      c.r2 = std::max(c.r2, R_ * R_ * std::abs(psi_rr(x, t)) / pa);
      c.t1 = std::max(c.t1, T_ * std::abs(psi_t(x, t)) / ps);
      c.grad_sq = std::max(c.grad_sq, R_ * R_ * pr * pr / (p * ps));
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Term table at the maximum of psi w
// ---------------------------------------------------------------------------

io::Csv CutoffTermTable::csv() const {
  io::Csv out;
  out.header = {"term_name", "value", "bound", "slack"};
  for (const auto& r : rows)
    out.add_row({r.name, io::fmt(r.value), io::fmt(r.bound), io::fmt(r.slack)});
  return out;
}

CutoffTermTable verify_cutoff_terms(const HeatSolution& u, double log_M, double k,
                                    const CutoffProfile& cutoff, double c,
                                    const LatticeSpec& lattice) {
  if (u.radial() && cutoff.x0() != 0.0)
    throw UnsupportedError("cutoff terms on radial models require a pole-centered cube");

  const ParabolicCube cube(cutoff.x0(), cutoff.R(), cutoff.t0(), cutoff.T());
  const Rect box = cube_box(u, cube);

  // Lattice maximum of psi w.
  double best = -1.0, x1 = cutoff.x0(), t1 = cutoff.t0();
  for (int m = 0; m < lattice.nt; ++m) {
    const double t = box.t_lo + (box.t_hi - box.t_lo) * m / (lattice.nt - 1);
    for (int i = 0; i < lattice.nx; ++i) {
      const double x = box.x_lo + (box.x_hi - box.x_lo) * i / (lattice.nx - 1);
      const double p = cutoff.psi(x, t);
      if (p <= 0.0) continue;
      const LogQuantities q = log_quantities(u, log_M, x, t);
      if (p * q.w > best) {
        best = p * q.w;
        x1 = x;
        t1 = t;
      }
    }
  }
  if (best < 0.0) best = 0.0;

  const double xe = clamp_radial(u, x1);
  const LogQuantities q = log_quantities(u, log_M, xe, t1);
  const double psi = cutoff.psi(x1, t1);
  const double psi_r = cutoff.psi_r(x1, t1);
  const double psi_rr = cutoff.psi_rr(x1, t1);
  const double psi_t = cutoff.psi_t(x1, t1);
  const double lap_psi = u.manifold().laplacian(psi_rr, psi_r, xe);

  const double s = 1.0 - q.f;
  const double R = cutoff.R(), T = cutoff.T();
  const double psiw2 = psi * q.w * q.w;

  struct Raw {
    const char* name;
    double value;
    double base;   // c-independent part of the bound
    double slope;  // coefficient of c in the bound
  };
  const double f4 = q.f * q.f * q.f * q.f;
  const Raw raws[5] = {
      {"b_dot_grad_psi", std::abs(-2.0 * q.f / s * q.f_r * psi_r * q.w),
       s * psiw2, f4 / (R * R * R * R * s * s * s)},
      {"grad_psi_sq_over_psi", psi > 0.0 ? psi_r * psi_r / psi * q.w : 0.0,
       psiw2 / 8.0, 1.0 / (R * R * R * R)},
      {"neg_laplacian_psi", -lap_psi * q.w, psiw2 / 8.0,
       1.0 / (R * R * R * R) + k / (R * R)},
      {"psi_time", std::abs(psi_t) * q.w, psiw2 / 8.0, 1.0 / (T * T)},
      {"ricci_term", 2.0 * k * q.w * psi, psiw2 / 8.0, k * k},
  };

  CutoffTermTable out;
  out.x1 = x1;
  out.t1 = t1;
  out.psi_w_max = best;
  out.c_used = c;
  double c_needed = 0.0;
  for (const Raw& r : raws) {
    CutoffTermRow row;
    row.name = r.name;
    row.value = r.value;
    row.bound = r.base + c * r.slope;
    row.slack = row.bound - row.value;
    out.rows.push_back(row);
    if (r.value > r.base) {
      if (r.slope > 0.0)
        c_needed = std::max(c_needed, (r.value - r.base) / r.slope);
      else
        c_needed = std::numeric_limits<double>::infinity();
    }
  }
  out.calibrated_c = c_needed;
  return out;
}

double final_conclusion_ratio(const HeatSolution& u, double log_M, double k,
                              const ParabolicCube& cube, const LatticeSpec& lattice) {
  const ParabolicCube inner = cube.quarter_time();
  const Rect box = cube_box(u, inner);
  const double denom = 1.0 / cube.R + 1.0 / std::sqrt(cube.T) + std::sqrt(k);
  double best = 0.0;
  for (int m = 0; m < lattice.nt; ++m) {
    const double t = box.t_lo + (box.t_hi - box.t_lo) * m / (lattice.nt - 1);
    for (int i = 0; i < lattice.nx; ++i) {
      const double x = box.x_lo + (box.x_hi - box.x_lo) * i / (lattice.nx - 1);
      const LogQuantities q = log_quantities(u, log_M, x, t);
      best = std::max(best, std::sqrt(q.w) / denom);
    }
  }
  return best;
}

}  // namespace heatlab
