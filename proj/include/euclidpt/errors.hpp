#pragma once

#include <stdexcept>
#include <string>

namespace euclidpt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Product would leave the degree-2 truncation.
class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

// No real Dyson parameter exists; rhs() is the value of the coth equation.
class MapUndefined : public Error {
 public:
  MapUndefined(const std::string& what, double rhs);
  double rhs() const noexcept { return rhs_; }

 private:
  double rhs_;
};

class DegenerateCouplings : public Error {
 public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

class TrackingAmbiguity : public Error {
 public:
  TrackingAmbiguity(const std::string& what, double axis_value);
  double axis_value() const noexcept { return axis_value_; }

 private:
  double axis_value_;
};

// Invalid user input (bad names, missing parameters, malformed JSON).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace euclidpt
