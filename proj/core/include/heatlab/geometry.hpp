#pragma once

#include <functional>
#include <limits>
#include <string>

#include "heatlab/errors.hpp"

namespace heatlab {

/// Smallest radial coordinate accepted by pole-sensitive operations.
inline constexpr double kPoleRadius = 1e-8;

enum class ManifoldKind { Euclidean, Hyperbolic, Sphere, Warped };

/// Warping profile phi(r) for a rotationally symmetric metric
/// dr^2 + phi(r)^2 dS^2, with its first two derivatives and working range.
struct WarpProfile {
  std::function<double(double)> value;
  std::function<double(double)> d1;
  std::function<double(double)> d2;
  double r_max = 0.0;
};

/// A rotationally symmetric model manifold. Everything the solvers and
/// estimate evaluators need is radial: the warping profile phi, the drift
/// coefficient (n-1) phi'/phi of the Laplace-Beltrami operator, the
/// radial-radial Ricci curvature and the lower bound k with Ric >= -k.
///
/// For n = 1 (line or circle fixtures) all curvature quantities vanish and
/// the Laplacian is the plain second derivative.
class ModelManifold {
 public:
  static ModelManifold euclidean(int n);
  static ModelManifold hyperbolic(int n, double kappa);  // kappa < 0
  static ModelManifold sphere(int n, double kappa);      // kappa > 0
  /// Validates phi(0) = 0, phi'(0) = 1 and positivity on (0, r_max], and
  /// measures the Ricci lower bound on a grid.
  static ModelManifold warped(int n, WarpProfile profile);

  int dim() const { return n_; }
  ManifoldKind kind() const { return kind_; }
  double curvature() const { return kappa_; }
  /// Ricci lower bound k with Ric >= -k (radial-radial component for Warped).
  double ricci_bound() const { return k_; }
  /// Largest admissible radial coordinate (pi/sqrt(kappa) on spheres,
  /// profile range for warped models, +inf otherwise).
  double max_radius() const { return r_max_; }
  std::string name() const;

  double warp(double r) const;
  double warp_d1(double r) const;
  double warp_d2(double r) const;
  /// (n-1) phi'/phi, the first-order coefficient of the radial Laplacian.
  double drift(double r) const;
  /// phi'/phi, the per-direction angular Hessian coefficient (0 when n = 1).
  double angular_coeff(double r) const;
  /// Radial-radial Ricci curvature -(n-1) phi''/phi (0 when n = 1).
  double ricci_rr(double r) const;

  /// Laplace-Beltrami of a radial scalar from its first two r-derivatives.
  double laplacian(double u_rr, double u_r, double r) const;

 private:
  ModelManifold(int n, ManifoldKind kind, double kappa, double k, double r_max)
      : n_(n), kind_(kind), kappa_(kappa), k_(k), r_max_(r_max) {}
  void check_radius(double r) const;

  int n_;
  ManifoldKind kind_;
  double kappa_ = 0.0;
  double k_ = 0.0;
  double r_max_ = std::numeric_limits<double>::infinity();
  WarpProfile profile_;
};

/// A radial function with two derivatives, the argument type of the
/// standalone Laplacian evaluator.
struct RadialProfile {
  std::function<double(double)> value;
  std::function<double(double)> d1;
  std::function<double(double)> d2;
};

/// Delta u = u'' + (n-1)(phi'/phi) u' for radial u at r > 0.
double radial_laplacian(const ModelManifold& M, const RadialProfile& u, double r);

/// Smallest admissible k with Ric >= -k on (0, r_max]. Exact for the
/// constant-curvature kinds; a grid supremum of -Ric_rr for Warped.
double ricci_lower_bound(const ModelManifold& M, double r_max);

/// Area of the unit (n-1)-sphere in R^n (2 for n = 1).
double unit_sphere_area(int n);

/// Volume of the geodesic ball of radius r: integral of w_{n-1} phi^{n-1}.
/// Closed form on Euclidean models, composite Simpson elsewhere.
double ball_volume(const ModelManifold& M, double r, int panels = 1024);

/// The space-time box B(x0, R) x [t0 - T, t0] together with its shrunken
/// companions on which the estimates are asserted.
struct ParabolicCube {
  double x0 = 0.0;
  double R = 1.0;
  double t0 = 0.0;
  double T = 1.0;

  ParabolicCube() = default;
  ParabolicCube(double x0_, double R_, double t0_, double T_);
  static ParabolicCube from_corners(double x_lo, double x_hi, double t_lo, double t_hi);

  double x_lo() const { return x0 - R; }
  double x_hi() const { return x0 + R; }
  double t_lo() const { return t0 - T; }
  double t_hi() const { return t0; }

  /// Q_{R/2, T/2}, where the gradient estimates hold.
  ParabolicCube half() const { return {x0, R / 2.0, t0, T / 2.0}; }
  /// Q_{R/2, T/4}, where the cutoff is identically one.
  ParabolicCube quarter_time() const { return {x0, R / 2.0, t0, T / 4.0}; }

  bool contains(double x, double t) const {
    return x >= x_lo() && x <= x_hi() && t >= t_lo() && t <= t_hi();
  }
};

}  // namespace heatlab
