#pragma once

#include <stdexcept>
#include <string>

namespace heatlab {

/// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation outside a valid domain (pole, profile range, grid stencil).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// API used against its contract (e.g. a time-dependent solution passed to a
/// harmonic-only check).
class MisuseError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent data supplied by the caller (e.g. M smaller than u somewhere).
class DataError : public Error {
 public:
  using Error::Error;
};

/// A stated precondition does not hold at runtime.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Invalid parameters at construction time.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A combination the library deliberately does not support.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// The finite-difference scheme produced a non-positive value.
class PositivityError : public Error {
 public:
  PositivityError(const std::string& what, double r, double t)
      : Error(what), r_(r), t_(t) {}
  double where_r() const { return r_; }
  double where_t() const { return t_; }

 private:
  double r_;
  double t_;
};

}  // namespace heatlab
