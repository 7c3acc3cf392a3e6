#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "heatlab/geometry.hpp"
#include "heatlab/jet.hpp"

namespace heatlab {

/// Working rectangle [x_lo, x_hi] x [t_lo, t_hi] in solution coordinates.
/// For n = 1 the spatial coordinate is the signed line coordinate; for
/// n >= 2 it is the radial distance from the pole.
struct Rect {
  double x_lo = 0.0;
  double x_hi = 1.0;
  double t_lo = 0.0;
  double t_hi = 1.0;

  bool contains(double x, double t) const {
    return x >= x_lo && x <= x_hi && t >= t_lo && t <= t_hi;
  }
  bool contains(const Rect& r) const {
    return r.x_lo >= x_lo && r.x_hi <= x_hi && r.t_lo >= t_lo && r.t_hi <= t_hi;
  }
};

/// Lattice of solver values on a space-time rectangle.
struct GridData {
  double r_lo = 0.0, r_hi = 1.0, t_lo = 0.0, t_hi = 1.0;
  int nr = 0, nt = 0;  // node counts along r and t
  double h = 0.0, tau = 0.0;
  std::vector<double> u;  // u[m * nr + i]

  double at(int i, int m) const { return u[static_cast<size_t>(m) * nr + i]; }
  double r_of(int i) const { return r_lo + i * h; }
  double t_of(int m) const { return t_lo + m * tau; }
  int snap_r(double x) const;
  int snap_t(double t) const;

  double min_interior = 0.0;  // minimum over i in [1, nr-2], m >= 1
  double min_boundary = 0.0;  // minimum over the parabolic boundary
};

struct GridSpec {
  double r_lo, r_hi, t_lo, t_hi;
  int nr, nt;
};

/// A positive (or, for a few dedicated fixtures, sign-changing) function of
/// (x, t) on a model manifold, either closed-form with exact derivatives or
/// a solver lattice with finite-difference derivatives.
///
/// Closed forms are evaluated in log space whenever the form is positive, so
/// quantities like grad u / u and ln(M/u) stay finite even when u itself
/// overflows double range (steep traveling waves).
class HeatSolution {
 public:
  enum class Form { Analytic, Grid };

  const ModelManifold& manifold() const;
  Form form() const;
  const std::string& name() const;
  const Rect& domain() const;
  /// True when the coordinate is a radial distance (dim >= 2).
  bool radial() const;
  /// The form is positive on its domain by construction.
  bool positive() const;
  /// False for static verification fixtures that do not solve the equation.
  bool solves_heat() const;
  const std::vector<std::string>& notes() const;

  double value(double x, double t) const;
  double log_value(double x, double t) const;
  /// Jet of ln u. Throws for sign-changing forms at points where u <= 0.
  Jet log_jet(double x, double t) const;
  /// Jet of u itself. May overflow for very steep closed forms.
  Jet value_jet(double x, double t) const;

  /// ln sup u over the cube. Closed-form maximization where the form allows
  /// it; otherwise a dense lattice sample (with a 0.1% safety factor for
  /// analytic forms; exact lattice max for grids).
  double log_sup(const ParabolicCube& cube, int nx = 101, int nt = 101) const;
  /// sup |u| over the cube (lattice sample; exact for monotone forms).
  double sup_abs(const ParabolicCube& cube, int nx = 101, int nt = 101) const;
  /// ln inf u over the working domain (-inf if the form touches zero).
  double log_floor(int nx = 201, int nt = 201) const;

  /// The rescaled solution lambda * u, lambda > 0.
  HeatSolution scaled(double lambda) const;

  const GridData* grid() const;  // nullptr for analytic forms
  /// CSV block "r,t,u" for grid solutions.
  std::string to_csv() const;

  struct Impl;
  explicit HeatSolution(std::shared_ptr<const Impl> impl);

 private:
  std::shared_ptr<const Impl> impl_;
};

enum class ClosedFormKind {
  GaussianKernel,    // Euclidean, t > 0
  TravelingWave,     // Euclidean n = 1: exp(a x + a^2 t)
  Linear,            // Euclidean n = 1: u = x on a positive domain
  Hyperbolic3Kernel, // Hyperbolic kappa = -1, n = 3 heat kernel
  Constant,
};

struct SolutionParams {
  double a = 1.0;  // traveling-wave slope
  double c = 1.0;  // constant value
  Rect domain;
};

HeatSolution make_closed_form(ClosedFormKind kind, const ModelManifold& M,
                              const SolutionParams& params);

/// Positive solution 2 + sin(x) e^{-t} on the flat circle (period 2 pi);
/// compact positive control for the bounded-solution estimate.
HeatSolution make_torus_wave(const Rect& domain);

/// Static radial fixture u = e^{b r} (not a heat solution); used to probe the
/// curvature commutator term on curved models.
HeatSolution make_exp_radial(const ModelManifold& M, double b, const Rect& domain);

/// Sign-changing bounded line solution amp * sin(x) e^{-(t - t_ref)};
/// fixture for the shifted sublinear-growth sweeps.
HeatSolution make_decaying_sine(double amplitude, double t_ref, const Rect& domain);

/// Eternal affine line solution slope * x + intercept, sign changes allowed;
/// the sharp non-constant example for the sublinear Liouville statement.
HeatSolution make_eternal_affine(double slope, double intercept, const Rect& domain);

/// Time-independent profile amp * sin(x) (not a heat solution); a uniformly
/// bounded sign-changing fixture for formula-decay demonstrations.
HeatSolution make_static_sine(double amplitude, const Rect& domain);

/// Crank-Nicolson solve of u_t = u'' + (n-1)(phi'/phi) u' with Dirichlet data.
/// Positive data required; a non-positive value during stepping aborts with
/// the offending location.
HeatSolution solve_radial_heat(const ModelManifold& M,
                               const std::function<double(double)>& initial,
                               const std::function<double(double)>& boundary_lo,
                               const std::function<double(double)>& boundary_hi,
                               const GridSpec& grid);

/// Delta u - u_t at an interior point (exact derivatives for analytic forms,
/// central differences on the lattice for grids).
double heat_residual(const HeatSolution& u, double x, double t);

/// The cube as a coordinate rectangle on the solution's domain. On radial
/// models a ball around the pole reads as r in [0, R]; the spatial range is
/// clamped accordingly. Throws DomainError if the result leaves the domain.
Rect cube_box(const HeatSolution& u, const ParabolicCube& cube);

/// Low-discrepancy points in the interior of a cube (Halton, deterministic;
/// `seed` offsets the sequence). Spatial coordinates are kept one margin away
/// from the cube faces, and clamped away from the pole on radial models.
std::vector<std::pair<double, double>> interior_points(const HeatSolution& u,
                                                       const ParabolicCube& cube,
                                                       int count, unsigned seed = 0,
                                                       double margin = 0.05);

}  // namespace heatlab
