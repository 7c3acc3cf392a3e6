#include "heatlab/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace heatlab {

ModelManifold ModelManifold::euclidean(int n) {
  if (n < 1) throw ConstructionError("dimension must be >= 1");
  return ModelManifold(n, ManifoldKind::Euclidean, 0.0, 0.0,
                       std::numeric_limits<double>::infinity());
}

ModelManifold ModelManifold::hyperbolic(int n, double kappa) {
  if (n < 1) throw ConstructionError("dimension must be >= 1");
  if (kappa >= 0.0) throw ConstructionError("hyperbolic model needs kappa < 0");
  const double k = -(n - 1) * kappa;
  return ModelManifold(n, ManifoldKind::Hyperbolic, kappa, k,
                       std::numeric_limits<double>::infinity());
}

ModelManifold ModelManifold::sphere(int n, double kappa) {
  if (n < 1) throw ConstructionError("dimension must be >= 1");
  if (kappa <= 0.0) throw ConstructionError("sphere model needs kappa > 0");
  // Ricci is positive, so the admissible lower bound is k = 0.
  return ModelManifold(n, ManifoldKind::Sphere, kappa, 0.0,
                       M_PI / std::sqrt(kappa));
}

ModelManifold ModelManifold::warped(int n, WarpProfile profile) {
  if (n < 1) throw ConstructionError("dimension must be >= 1");
  if (!profile.value || !profile.d1 || !profile.d2 || profile.r_max <= 0.0)
    throw ConstructionError("warped profile needs value, d1, d2 and r_max > 0");
  const double tol = 1e-8;
  if (std::abs(profile.value(0.0)) > tol || std::abs(profile.d1(0.0) - 1.0) > tol)
    throw ConstructionError("warped profile must satisfy phi(0) = 0, phi'(0) = 1");

  ModelManifold M(n, ManifoldKind::Warped, 0.0, 0.0, profile.r_max);
  M.profile_ = std::move(profile);
  M.k_ = ricci_lower_bound(M, M.r_max_);
  return M;
}

std::string ModelManifold::name() const {
  switch (kind_) {
    case ManifoldKind::Euclidean: return "euclidean(n=" + std::to_string(n_) + ")";
    case ManifoldKind::Hyperbolic:
      return "hyperbolic(n=" + std::to_string(n_) + ",kappa=" + std::to_string(kappa_) + ")";
    case ManifoldKind::Sphere:
      return "sphere(n=" + std::to_string(n_) + ",kappa=" + std::to_string(kappa_) + ")";
    case ManifoldKind::Warped: return "warped(n=" + std::to_string(n_) + ")";
  }
  return "?";
}

void ModelManifold::check_radius(double r) const {
  if (r < kPoleRadius)
    throw DomainError("radial coordinate too close to the pole: r = " + std::to_string(r));
  if (r > r_max_)
    throw DomainError("radial coordinate beyond the model's working range");
}

double ModelManifold::warp(double r) const {
  check_radius(r);
  switch (kind_) {
    case ManifoldKind::Euclidean: return r;
    case ManifoldKind::Hyperbolic: {
      const double c = std::sqrt(-kappa_);
      return std::sinh(c * r) / c;
    }
    case ManifoldKind::Sphere: {
      const double c = std::sqrt(kappa_);
      return std::sin(c * r) / c;
    }
    case ManifoldKind::Warped: return profile_.value(r);
  }
  return 0.0;
}

double ModelManifold::warp_d1(double r) const {
  check_radius(r);
  switch (kind_) {
    case ManifoldKind::Euclidean: return 1.0;
    case ManifoldKind::Hyperbolic: return std::cosh(std::sqrt(-kappa_) * r);
    case ManifoldKind::Sphere: return std::cos(std::sqrt(kappa_) * r);
    case ManifoldKind::Warped: return profile_.d1(r);
  }
  return 0.0;
}

double ModelManifold::warp_d2(double r) const {
  check_radius(r);
  switch (kind_) {
    case ManifoldKind::Euclidean: return 0.0;
    case ManifoldKind::Hyperbolic: return -kappa_ * warp(r);
    case ManifoldKind::Sphere: return -kappa_ * warp(r);
    case ManifoldKind::Warped: return profile_.d2(r);
  }
  return 0.0;
}

double ModelManifold::drift(double r) const {
  if (n_ == 1) return 0.0;
  return (n_ - 1) * warp_d1(r) / warp(r);
}

double ModelManifold::angular_coeff(double r) const {
  if (n_ == 1) return 0.0;
  return warp_d1(r) / warp(r);
}

double ModelManifold::ricci_rr(double r) const {
  if (n_ == 1) return 0.0;
  return -(n_ - 1) * warp_d2(r) / warp(r);
}

double ModelManifold::laplacian(double u_rr, double u_r, double r) const {
  if (n_ == 1) return u_rr;
  return u_rr + drift(r) * u_r;
}

double radial_laplacian(const ModelManifold& M, const RadialProfile& u, double r) {
  if (r < kPoleRadius) throw DomainError("radial_laplacian: r too close to the pole");
  return M.laplacian(u.d2(r), u.d1(r), r);
}

double ricci_lower_bound(const ModelManifold& M, double r_max) {
  switch (M.kind()) {
    case ManifoldKind::Euclidean:
    case ManifoldKind::Sphere:
      return 0.0;
    case ManifoldKind::Hyperbolic:
      return -(M.dim() - 1) * M.curvature();
    case ManifoldKind::Warped:
      break;
  }
  if (M.dim() == 1) return 0.0;
  if (r_max > M.max_radius())
    throw DomainError("ricci_lower_bound: r_max beyond the profile range");
  // Smallest admissible k is the supremum of -Ric_rr, clamped at zero.
  const int samples = 4096;
  double worst = 0.0;
  for (int i = 1; i <= samples; ++i) {
    const double r = r_max * static_cast<double>(i) / samples;
    const double phi = M.warp(r);
    if (phi <= 0.0)
      throw ConstructionError("warped profile vanishes inside (0, r_max]");
    worst = std::max(worst, -M.ricci_rr(r));
  }
  return worst;
}

double unit_sphere_area(int n) {
  if (n < 1) throw ConstructionError("dimension must be >= 1");
  return 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n);
}

double ball_volume(const ModelManifold& M, double r, int panels) {
  if (r <= 0.0) throw DomainError("ball_volume: r must be positive");
  if (r > M.max_radius()) throw DomainError("ball_volume: r beyond the model range");
  const double area = unit_sphere_area(M.dim());
  if (M.kind() == ManifoldKind::Euclidean)
    return area * std::pow(r, M.dim()) / M.dim();

  if (panels < 2) panels = 2;
  if (panels % 2 != 0) ++panels;
  const double h = r / panels;
  const int n = M.dim();
  auto density = [&](double s) {
    if (n == 1) return 1.0;
    if (s <= 0.0) return 0.0;  // phi(0) = 0
    return std::pow(M.warp(std::max(s, kPoleRadius)), n - 1);
  };
  double sum = density(0.0) + density(r);
  for (int i = 1; i < panels; ++i)
    sum += density(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return area * sum * h / 3.0;
}

ParabolicCube::ParabolicCube(double x0_, double R_, double t0_, double T_)
    : x0(x0_), R(R_), t0(t0_), T(T_) {
  if (R <= 0.0 || T <= 0.0)
    throw ConstructionError("parabolic cube needs R > 0 and T > 0");
}

ParabolicCube ParabolicCube::from_corners(double x_lo, double x_hi, double t_lo,
                                          double t_hi) {
  return ParabolicCube(0.5 * (x_lo + x_hi), 0.5 * (x_hi - x_lo), t_hi, t_hi - t_lo);
}

}  // namespace heatlab
