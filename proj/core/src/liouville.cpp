#include "heatlab/liouville.hpp"

#include <algorithm>
#include <cmath>

namespace heatlab {

namespace {

// ln(u + 1) from ln u, stable for very large and very small u.
double log1p_exp(double log_u) {
  if (log_u > 0.0) return log_u + std::log1p(std::exp(-log_u));
  return std::log1p(std::exp(log_u));
}

struct Window {
  Rect box;
};

Window growth_window(const HeatSolution& u, double x0, double t0, double half_width,
                     double depth) {
  Rect box{x0 - half_width, x0 + half_width, t0 - depth, t0 + depth};
  if (u.radial()) box.x_lo = std::max(box.x_lo, 0.0);
  if (!u.domain().contains(box))
    throw DomainError(u.name() + ": growth window leaves the working domain");
  return {box};
}

double sup_log1p_over(const HeatSolution& u, const Rect& box, const LatticeSpec& lat) {
  double best = -std::numeric_limits<double>::infinity();
  for (int m = 0; m < lat.nt; ++m) {
    const double t = box.t_lo + (box.t_hi - box.t_lo) * m / (lat.nt - 1);
    for (int i = 0; i < lat.nx; ++i) {
      const double x = box.x_lo + (box.x_hi - box.x_lo) * i / (lat.nx - 1);
      best = std::max(best, log1p_exp(u.log_value(x, t)));
    }
  }
  return best;
}

struct AbsSups {
  double sup_abs = 0.0;     // sup |u|
  double sup_signed = 0.0;  // sup u
  double inf_signed = 0.0;  // inf u
};

AbsSups signed_sups(const HeatSolution& u, const Rect& box, const LatticeSpec& lat) {
  AbsSups s;
  s.sup_signed = -std::numeric_limits<double>::infinity();
  s.inf_signed = std::numeric_limits<double>::infinity();
  for (int m = 0; m < lat.nt; ++m) {
    const double t = box.t_lo + (box.t_hi - box.t_lo) * m / (lat.nt - 1);
    for (int i = 0; i < lat.nx; ++i) {
      const double x = box.x_lo + (box.x_hi - box.x_lo) * i / (lat.nx - 1);
      const double v = u.value(x, t);
      s.sup_abs = std::max(s.sup_abs, std::abs(v));
      s.sup_signed = std::max(s.sup_signed, v);
      s.inf_signed = std::min(s.inf_signed, v);
    }
  }
  return s;
}

}  // namespace

GrowthProfile classify_growth(const HeatSolution& u, EnvelopeKind kind, double x0,
                              double t0, std::span<const double> radii,
                              const std::function<double(double)>& modulus,
                              const LatticeSpec& lattice) {
  if (radii.empty()) throw PreconditionError("classify_growth needs radii");
  GrowthProfile out;
  out.kind = kind;
  bool monotone = true;
  double prev = std::numeric_limits<double>::infinity();
  for (double R : radii) {
    if (R <= 0.0) throw PreconditionError("radii must be positive");
    double g;
    if (kind == EnvelopeKind::ExpSublinear) {
      const Window win = growth_window(u, x0, t0, 2.0 * R, 4.0 * R * R);
      g = sup_log1p_over(u, win.box, lattice) / R;
    } else {
      const Window win = growth_window(u, x0, t0, 2.0 * R, std::sqrt(2.0 * R));
      g = signed_sups(u, win.box, lattice).sup_abs / R;
    }
    out.table.emplace_back(R, g);
    if (g > prev * (1.0 + 1e-9)) monotone = false;
    prev = g;
  }
  // Decreasing toward zero: monotone across the ladder and below the
  // user's modulus at the largest tested radius.
  out.admissible = monotone && out.table.back().second <= modulus(radii.back());
  return out;
}

LiouvilleSweep gradient_decay_sweep_a(const HeatSolution& u, double x0, double t0,
                                      std::span<const double> radii, double constant,
                                      const LatticeSpec& lattice) {
  if (radii.empty()) throw PreconditionError("sweep needs radii");
  LiouvilleSweep out;
  const Jet base = u.value_jet(x0, t0);
  if (!(base.v + 1.0 > 0.0))
    throw PreconditionError("sweep_a needs u + 1 > 0 at the base point");
  const double log_base = std::log1p(base.v);
  const double true_value = std::abs(base.dr) / (base.v + 1.0);

  bool first = true;
  double prev = 0.0;
  for (double R : radii) {
    const Window win = growth_window(u, x0, t0, R, R * R);
    const double log_M = sup_log1p_over(u, win.box, lattice);
    LiouvilleRow row;
    row.R = R;
    row.bound = constant * (2.0 / R) * (1.0 + log_M - log_base);
    row.true_value = true_value;
    row.verdict = first ? "-" : (row.bound < prev ? "decreasing" : "nondecreasing");
    first = false;
    prev = row.bound;
    out.rows.push_back(row);
  }
  return out;
}

LiouvilleSweep gradient_decay_sweep_b(const HeatSolution& u, double x0, double t0,
                                      std::span<const double> radii, double constant,
                                      TimeDepthB depth, const LatticeSpec& lattice) {
  if (radii.empty()) throw PreconditionError("sweep needs radii");
  LiouvilleSweep out;
  const Jet base = u.value_jet(x0, t0);
  const double true_value = std::abs(base.dr);

  bool first = true;
  double prev = 0.0;
  for (double R : radii) {
    const double T_b =
        depth == TimeDepthB::LiteralSqrt ? std::sqrt(2.0 * R) : 4.0 * R * R;
    const Window win = growth_window(u, x0, t0, 2.0 * R, T_b);
    const AbsSups sups = signed_sups(u, win.box, lattice);
    LiouvilleRow row;
    row.R = R;
    row.true_value = true_value;
    if (sups.sup_abs == 0.0) {
      row.bound = 0.0;  // u identically zero on the window
      row.verdict = "degenerate";
      out.rows.push_back(row);
      continue;
    }
    const double A = sups.sup_abs;
    const double U0 = base.v + 2.0 * A;
    const double M_U = sups.sup_signed + 2.0 * A;  // <= 3A
    const double U_min = sups.inf_signed + 2.0 * A;  // >= A
    if (!(U_min > 0.0)) throw Error("shift failed to make U positive");
    out.max_log_sandwich =
        std::max(out.max_log_sandwich, std::log(M_U) - std::log(U_min));
    const double shape = 1.0 / (2.0 * R) + 1.0 / std::sqrt(T_b);
    const double bound_formula = constant * shape * (1.0 + std::log(M_U / U0));
    row.bound = bound_formula * U0;
    row.verdict = first ? "-" : (row.bound < prev ? "decreasing" : "nondecreasing");
    first = false;
    prev = row.bound;
    out.rows.push_back(row);
  }
  return out;
}

io::Csv LiouvilleSweep::csv() const {
  io::Csv out;
  out.header = {"R", "bound", "true_value", "verdict"};
  for (const auto& r : rows)
    out.add_row({io::fmt(r.R), io::fmt(r.bound), io::fmt(r.true_value), r.verdict});
  return out;
}

}  // namespace heatlab
