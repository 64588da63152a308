#pragma once

#include <stdexcept>
#include <string>

namespace rotstar {

/// Base class for all solver errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Polytropic index outside the admissible range (nu <= 1).
class InvalidIndex : public Error {
 public:
  using Error::Error;
};

/// theta stayed positive up to r_max; no finite first zero exists.
class NoFiniteZero : public Error {
 public:
  NoFiniteZero(double r_max_, const std::string& msg) : Error(msg), r_max(r_max_) {}
  double r_max;
};

/// Invalid configuration (grid sizes, tolerances, flags).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of the requested quantity.
class OutOfDomain : public Error {
 public:
  using Error::Error;
};

/// Kernel evaluation requested at (numerically) coincident points.
class CoincidentPoints : public Error {
 public:
  using Error::Error;
};

/// A mode system of the resolvent is numerically singular.
class SingularMode : public Error {
 public:
  SingularMode(int mode_, const std::string& msg) : Error(msg), mode(mode_) {}
  int mode;
};

/// The fixed-point iteration is diverging (eps too large).
class NotContracting : public Error {
 public:
  using Error::Error;
};

/// Iteration budget exhausted before reaching the tolerance.
class MaxIterExceeded : public Error {
 public:
  using Error::Error;
};

/// Root bracketing failed (no sign change over the search interval).
class NoBracket : public Error {
 public:
  using Error::Error;
};

/// Mode index not admissible (odd or too small).
class InvalidMode : public Error {
 public:
  using Error::Error;
};

/// Exterior matching system degenerate; upstream data inconsistent.
class DegenerateMatching : public Error {
 public:
  using Error::Error;
};

}  // namespace rotstar
