#pragma once

#include <cmath>

namespace heatlab {

/// Forward-mode derivative bundle for functions of one spatial coordinate r
/// and time t. Carries exactly the partials the rest of the library needs:
/// value, r-derivatives up to third order, the first time derivative and the
/// mixed r-t derivative. Closed-form solutions are written once against this
/// type and all their derivatives fall out exactly.
struct Jet {
  double v = 0.0;     // f
  double dr = 0.0;    // f_r
  double drr = 0.0;   // f_rr
  double drrr = 0.0;  // f_rrr
  double dt = 0.0;    // f_t
  double drt = 0.0;   // f_rt

  static Jet constant(double c) { return {c, 0, 0, 0, 0, 0}; }
  static Jet space(double r) { return {r, 1, 0, 0, 0, 0}; }
  static Jet time(double t) { return {t, 0, 0, 0, 1, 0}; }

  Jet operator-() const { return {-v, -dr, -drr, -drrr, -dt, -drt}; }
};

inline Jet operator+(const Jet& a, const Jet& b) {
  return {a.v + b.v, a.dr + b.dr, a.drr + b.drr, a.drrr + b.drrr,
          a.dt + b.dt, a.drt + b.drt};
}
inline Jet operator-(const Jet& a, const Jet& b) {
  return {a.v - b.v, a.dr - b.dr, a.drr - b.drr, a.drrr - b.drrr,
          a.dt - b.dt, a.drt - b.drt};
}
inline Jet operator+(const Jet& a, double c) { return a + Jet::constant(c); }
inline Jet operator+(double c, const Jet& a) { return a + Jet::constant(c); }
inline Jet operator-(const Jet& a, double c) { return a - Jet::constant(c); }
inline Jet operator-(double c, const Jet& a) { return Jet::constant(c) - a; }

inline Jet operator*(const Jet& a, const Jet& b) {
  Jet o;
  o.v = a.v * b.v;
  o.dr = a.dr * b.v + a.v * b.dr;
  o.drr = a.drr * b.v + 2.0 * a.dr * b.dr + a.v * b.drr;
  o.drrr = a.drrr * b.v + 3.0 * a.drr * b.dr + 3.0 * a.dr * b.drr + a.v * b.drrr;
  o.dt = a.dt * b.v + a.v * b.dt;
  o.drt = a.drt * b.v + a.dr * b.dt + a.dt * b.dr + a.v * b.drt;
  return o;
}
inline Jet operator*(const Jet& a, double c) {
  return {a.v * c, a.dr * c, a.drr * c, a.drrr * c, a.dt * c, a.drt * c};
}
inline Jet operator*(double c, const Jet& a) { return a * c; }

/// Chain rule through a scalar function h given h(f.v) and three derivatives.
inline Jet compose(const Jet& f, double h0, double h1, double h2, double h3) {
  Jet o;
  o.v = h0;
  o.dr = h1 * f.dr;
  o.drr = h2 * f.dr * f.dr + h1 * f.drr;
  o.drrr = h3 * f.dr * f.dr * f.dr + 3.0 * h2 * f.dr * f.drr + h1 * f.drrr;
  o.dt = h1 * f.dt;
  o.drt = h2 * f.dr * f.dt + h1 * f.drt;
  return o;
}

inline Jet exp(const Jet& f) {
  const double e = std::exp(f.v);
  return compose(f, e, e, e, e);
}

inline Jet log(const Jet& f) {
  const double iv = 1.0 / f.v;
  return compose(f, std::log(f.v), iv, -iv * iv, 2.0 * iv * iv * iv);
}

inline Jet sin(const Jet& f) {
  const double s = std::sin(f.v), c = std::cos(f.v);
  return compose(f, s, c, -s, -c);
}

inline Jet cos(const Jet& f) {
  const double s = std::sin(f.v), c = std::cos(f.v);
  return compose(f, c, -s, -c, s);
}

inline Jet sinh(const Jet& f) {
  const double s = std::sinh(f.v), c = std::cosh(f.v);
  return compose(f, s, c, s, c);
}

inline Jet cosh(const Jet& f) {
  const double s = std::sinh(f.v), c = std::cosh(f.v);
  return compose(f, c, s, c, s);
}

inline Jet inv(const Jet& f) {
  const double iv = 1.0 / f.v;
  return compose(f, iv, -iv * iv, 2.0 * iv * iv * iv, -6.0 * iv * iv * iv * iv);
}

inline Jet operator/(const Jet& a, const Jet& b) { return a * inv(b); }
inline Jet operator/(const Jet& a, double c) { return a * (1.0 / c); }
inline Jet operator/(double c, const Jet& a) { return inv(a) * c; }

inline Jet sqrt(const Jet& f) {
  const double s = std::sqrt(f.v);
  return compose(f, s, 0.5 / s, -0.25 / (s * f.v), 0.375 / (s * f.v * f.v));
}

}  // namespace heatlab
