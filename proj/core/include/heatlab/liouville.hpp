#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "heatlab/estimates.hpp"
#include "heatlab/solutions.hpp"

namespace heatlab {

/// Growth envelopes for eternal solutions. ExpSublinear admits
/// u = e^{o(d + sqrt|t|)}; Sublinear admits u = o(d + sqrt|t|). "Near
/// infinity" is operationalized as a monotone decay test against a
/// user-supplied modulus over a finite ladder of radii, measured on the
/// symmetric windows B(x0, 2R) x [t0 - T(R), t0 + T(R)].
enum class EnvelopeKind { ExpSublinear, Sublinear };

struct GrowthProfile {
  EnvelopeKind kind = EnvelopeKind::ExpSublinear;
  std::vector<std::pair<double, double>> table;  // (R, measured g(R))
  bool admissible = false;
};

GrowthProfile classify_growth(const HeatSolution& u, EnvelopeKind kind, double x0,
                              double t0, std::span<const double> radii,
                              const std::function<double(double)>& modulus,
                              const LatticeSpec& lattice = {201, 201});

struct LiouvilleRow {
  double R = 0.0;
  double bound = 0.0;
  double true_value = 0.0;
  std::string verdict;
};

struct LiouvilleSweep {
  std::vector<LiouvilleRow> rows;
  /// Part (b) only: the largest observed ln(M_U / U); at most ln 3.
  double max_log_sandwich = 0.0;
  io::Csv csv() const;  // R,bound,true_value,verdict
};

/// Exponential-envelope sweep: the localized estimate applied to u + 1 on
/// B(x0, R) with M = sup(u + 1) over the symmetric window |t - t0| <= R^2.
/// bound = constant (2/R)(1 + ln(M/(u(x0,t0)+1))); true value is
/// |grad u|/(u + 1) at the base point. For admissible growth the bound
/// decays; the wave e^{x+t} makes it grow.
LiouvilleSweep gradient_decay_sweep_a(const HeatSolution& u, double x0, double t0,
                                      std::span<const double> radii, double constant,
                                      const LatticeSpec& lattice = {201, 201});

/// Time depth of the part-(b) windows: the literal sqrt(2R), or the
/// parabolic (2R)^2 under which the bound collapses to C/R.
enum class TimeDepthB { LiteralSqrt, Parabolic };

/// Sublinear-envelope sweep via the shift U = u + 2 A_{2R} with
/// A_{2R} = sup |u| over B(x0, 2R) x [t0 -+ T_b]. Verifies the sandwich
/// A <= U <= 3A, evaluates the localized bound for U (so ln(M_U/U) <= ln 3),
/// and reports bound * U(x0, t0) as the |grad u| bound.
LiouvilleSweep gradient_decay_sweep_b(const HeatSolution& u, double x0, double t0,
                                      std::span<const double> radii, double constant,
                                      TimeDepthB depth = TimeDepthB::LiteralSqrt,
                                      const LatticeSpec& lattice = {201, 201});

}  // namespace heatlab
