#pragma once

#include <stdexcept>
#include <string>

namespace conelab {

/// Base class for all conelab failures. Every throw site uses one of the
/// named subclasses so callers (and the CLI) can map failures to outcomes.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Cone algebra above the desk-scale dimension cap (V<->H conversion is
/// brute-force and only supported for dim <= 4).
class UnsupportedDimensionError : public Error {
public:
  using Error::Error;
};

/// An operation was called with inputs violating its stated precondition.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// The cone integral does not converge: k >= c * |yc|_1.
class DivergenceRegimeError : public Error {
public:
  using Error::Error;
};

/// The requested quadrature spec cannot certify its truncation target.
class QuadratureSpecError : public Error {
public:
  using Error::Error;
};

/// A point, disc, or window leaves the geometric domain it must lie in.
class GeometryError : public Error {
public:
  using Error::Error;
};

/// The x-window is too small: |f/P| has not decayed at the boundary.
class WindowError : public Error {
public:
  using Error::Error;
};

/// Malformed or inconsistent configuration input (CLI exit code 2).
class ConfigError : public Error {
public:
  using Error::Error;
};

}  // namespace conelab
