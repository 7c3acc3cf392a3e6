#pragma once

#include <span>
#include <string>
#include <vector>

#include "heatlab/io.hpp"
#include "heatlab/solutions.hpp"

namespace heatlab {

/// The five gradient estimates the laboratory evaluates:
///   CY_1_1  elliptic bound grad u / u for positive harmonic functions
///   LY_1_2  parabolic bound |grad u|^2/u^2 - u_t/u
///   HAM_1_3 bounded-solution bound |grad u|^2/u^2 <= (1/t + 2k) ln(M/u)
///   SZ_1_4  localized log-corrected elliptic-type bound for the heat equation
///   SZ_1_5  kernel-free instantaneous form with u(x, 2t) on the right
enum class EstimateId { CY_1_1, LY_1_2, HAM_1_3, SZ_1_4, SZ_1_5 };

std::string to_string(EstimateId id);
/// Accepts the canonical spelling and compact aliases ("sz14", "cy11", ...).
EstimateId parse_estimate_id(const std::string& s);

struct LatticeSpec {
  int nx = 101;
  int nt = 101;
};

/// One estimate evaluated against one solution on one cube.
struct EstimateReport {
  EstimateId id = EstimateId::SZ_1_4;
  ParabolicCube cube;
  double k = 0.0;
  double constant_used = 1.0;
  double lhs_sup = 0.0;   // sup of the left-hand quantity over the half cube
  double rhs = 0.0;       // right-hand value at the ratio argmax
  double ratio = 0.0;     // sup over the half cube of LHS/RHS
  double argmax_x = 0.0;
  double argmax_t = 0.0;
  double log_M = 0.0;     // ln sup u over the full cube
  double M_used = 0.0;    // exp(log_M); may overflow to inf for steep forms

  /// Flat JSON object, keys: schema, estimate_id, R, T, k, constant, lhs_sup,
  /// rhs, ratio, argmax_r, argmax_t, M.
  std::string to_json() const;
  /// The same fields as a one-row CSV table.
  io::Csv to_csv() const;
};

/// Left-hand quantity of the estimate at a point. CY_1_1 insists the solution
/// is time-independent (|u_t| <= 1e-8 u) and throws MisuseError otherwise.
double evaluate_lhs(EstimateId id, const HeatSolution& u, double x, double t);

/// Right-hand value with the supplied constant; M is ln-sup over the cube.
/// `c2` is the additive constant of the SZ_1_5 form (ignored elsewhere).
double evaluate_rhs(EstimateId id, const HeatSolution& u, const ParabolicCube& cube,
                    double k, double constant, double x, double t, double c2 = 1.0);

/// Same, but with ln M supplied by the caller (e.g. a global bound that is
/// larger than the cube supremum).
double evaluate_rhs_with_log_sup(EstimateId id, const HeatSolution& u,
                                 const ParabolicCube& cube, double k, double constant,
                                 double x, double t, double log_M, double c2 = 1.0);

/// Sweeps the half cube Q_{R/2, T/2} on a sample lattice.
EstimateReport report(EstimateId id, const HeatSolution& u, const ParabolicCube& cube,
                      double k, double constant, const LatticeSpec& lattice = {});

// -- Sharpness sweeps on the traveling-wave family -------------------------
// The wave exp(a x + a^2 t) on Q = [1,3] x [1,2], evaluated at (2,2), makes
// the localized bound's two sides a and c(1+a): their ratio tends to 1/2, so
// no smaller right-hand shape can work. The same data makes the
// bounded-solution form fail unboundedly on the line.

struct SharpnessRow {
  double a;
  double lhs;        // = a
  double rhs_at_c1;  // = 2 (1 + a)
  double ratio;      // = a / (2 (1 + a))
};
std::vector<SharpnessRow> sharpness_scan(std::span<const double> a_values);
/// Ratios strictly increasing and below 1/2.
void validate_sharpness(const std::vector<SharpnessRow>& rows);
io::Csv sharpness_csv(const std::vector<SharpnessRow>& rows);

struct HamiltonFailureRow {
  double a;
  double lhs_sq;   // = a^2
  double ham_rhs;  // = a / t at t = 2
  double ratio;    // = 2 a, unbounded in a
};
std::vector<HamiltonFailureRow> hamilton_failure_scan(std::span<const double> a_values);
/// Ratios strictly increasing (the bounded-solution form cannot hold here).
void validate_hamilton_failure(const std::vector<HamiltonFailureRow>& rows);
io::Csv hamilton_failure_csv(const std::vector<HamiltonFailureRow>& rows);

/// Integrating the localized bound along the segment from x to y at fixed
/// time gives M/u(y,t) >= c (M/u(x,t))^theta with theta = exp(-constant
/// (1/R + 1/sqrt(T)) d(x,y)) and c = exp(theta - 1). Requires k = 0 and
/// d(x, y) <= sqrt(T). The result records both sides evaluated on u.
struct HarnackResult {
  double theta = 1.0;
  double c = 1.0;
  double lhs = 0.0;  // M / u(y, t)
  double rhs = 0.0;  // c (M / u(x, t))^theta
  bool holds = false;
};
HarnackResult harnack_theta(const HeatSolution& u, const ParabolicCube& cube, double x,
                            double y, double t, double constant);

}  // namespace heatlab
