#pragma once

#include <span>
#include <string>
#include <vector>

#include "heatlab/estimates.hpp"
#include "heatlab/solutions.hpp"

namespace heatlab {

/// Log-substitution data at a point: f = ln(u/M) (so f <= 0 on the cube) and
/// w = |grad ln(1-f)|^2 = |grad f|^2/(1-f)^2 with all the derivatives the
/// identity chain consumes. Derivatives are exact for analytic solutions and
/// finite-difference for grids.
struct LogQuantities {
  double f = 0.0;
  double f_r = 0.0, f_rr = 0.0, f_rrr = 0.0;
  double f_t = 0.0, f_rt = 0.0;
  double grad_f = 0.0;  // radial component, = f_r
  double w = 0.0;
  double w_r = 0.0, w_rr = 0.0, w_t = 0.0;
  double lap_f = 0.0, lap_w = 0.0;
};

LogQuantities log_quantities(const HeatSolution& u, double log_M, double x, double t);

/// max |Delta f + |grad f|^2 - f_t| over the points (zero for solutions).
double check_f_equation(const HeatSolution& u, double log_M,
                        std::span<const std::pair<double, double>> points);

/// Two independent codings of grad w must agree: the derivative of
/// |grad ln(1-f)|^2 versus the expanded 2 f_i f_ij/(1-f)^2 + 2 f_i^2 f_j/(1-f)^3.
/// Returns the max absolute discrepancy over the points.
double check_gradient_consistency(const HeatSolution& u, double log_M,
                                  std::span<const std::pair<double, double>> points);

/// The evolution identity for w: Delta w - w_t computed directly from the
/// derivatives of w must equal its expansion in f-derivatives with the
/// curvature commutator evaluated through the model's Ricci. Returns the
/// absolute residual at the point.
double check_w_identity(const HeatSolution& u, double log_M, double x, double t);

/// The curvature commutator of third derivatives for radial functions:
/// lhs = f_i f_ijj - f_j f_iij assembled from three separately coded pieces,
/// rhs = Ric_rr (f')^2, gap = rhs - (-k |grad f|^2) >= 0.
struct BochnerTerm {
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
};
BochnerTerm bochner_term(const ModelManifold& M, const HeatSolution& u, double log_M,
                         double x, double t);

/// Minimum over the points of
///   (Delta w - w_t) - [ 2f/(1-f) grad f . grad w + 2 (1-f) w^2 - 2 k w ],
/// which the proof machinery shows is nonnegative. Throws PreconditionError
/// if f > 0 anywhere in the sample.
double check_key_inequality(const HeatSolution& u, double log_M, double k,
                            std::span<const std::pair<double, double>> points);

/// Minimum over the points of the completed square
///   2 f_ij^2/(1-f)^2 + 2 |grad f|^4/(1-f)^4 + 4 f_i f_ij f_j/(1-f)^3  (>= 0).
double completing_square_min(const HeatSolution& u, double log_M,
                             std::span<const std::pair<double, double>> points);

/// Space-time cutoff psi(r, t) = chi((2r/R - 1)_+) eta(((t0-t) - T/4)_+ / (3T/4))
/// with chi(s) = (1-s)^p and eta(s) = (1-s)^2: identically one on Q_{R/2,T/4},
/// radially nonincreasing, supported in Q_{R,T}, with derivative-to-power
/// ratios controlled by 1/R and 1/T. At the crease where the bump starts to
/// fall the outward one-sided derivative is used, which is the larger one.
class CutoffProfile {
 public:
  CutoffProfile(double R, double T, double a, int p, double x0, double t0);

  double R() const { return R_; }
  double T() const { return T_; }
  double exponent() const { return a_; }
  int power() const { return p_; }
  double x0() const { return x0_; }
  double t0() const { return t0_; }

  double psi(double x, double t) const;
  double psi_r(double x, double t) const;   // d/dx, signed
  double psi_rr(double x, double t) const;
  double psi_t(double x, double t) const;

  /// The four measured property constants:
  ///   sup R |psi_r| / psi^a, sup R^2 |psi_rr| / psi^a,
  ///   sup T |psi_t| / psi^{1/2}, sup R^2 psi_r^2 / psi^{3/2}.
  struct Constants {
    double r1 = 0.0;
    double r2 = 0.0;
    double t1 = 0.0;
    double grad_sq = 0.0;
  };
  Constants measure(int nx = 201, int nt = 201) const;

 private:
  void eval_space(double x, double& chi, double& chi_r, double& chi_rr) const;
  void eval_time(double t, double& eta, double& eta_t) const;

  double R_, T_, a_;
  int p_;
  double x0_, t0_;
};

/// Validates 0 < a <= 1 - 2/p and p >= 4 even, then builds the profile
/// anchored at (x0, t0).
CutoffProfile build_cutoff(double R, double T, double a = 0.5, int p = 4,
                           double x0 = 0.0, double t0 = 0.0);

/// One bounded term of the maximum-point inequality, its bound with the
/// supplied c, and the slack bound - value.
struct CutoffTermRow {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  double slack = 0.0;
};

struct CutoffTermTable {
  double x1 = 0.0, t1 = 0.0;  // lattice maximum of psi w
  double psi_w_max = 0.0;
  double c_used = 0.0;
  double calibrated_c = 0.0;  // smallest c making every slack nonnegative
  std::vector<CutoffTermRow> rows;
  io::Csv csv() const;  // term_name,value,bound,slack
};

/// Locates the lattice maximum of psi w over the cutoff's cube and evaluates
/// the five bounded right-hand terms with the supplied c.
CutoffTermTable verify_cutoff_terms(const HeatSolution& u, double log_M, double k,
                                    const CutoffProfile& cutoff, double c,
                                    const LatticeSpec& lattice = {});

/// sup over Q_{R/2, T/4} of sqrt(w) / (1/R + 1/sqrt(T) + sqrt(k)): the
/// empirical constant of the final display of the proof chain.
double final_conclusion_ratio(const HeatSolution& u, double log_M, double k,
                              const ParabolicCube& cube, const LatticeSpec& lattice = {});

}  // namespace heatlab
