#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace scatmat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidMeshError : public Error {
 public:
  using Error::Error;
};

// Probe or source point outside the domain the operation is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

class SolverError : public Error {
 public:
  SolverError(const std::string& msg, double residual)
      : Error(msg), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// Denominator of the effective-capacitance formula too close to zero.
class ResonanceError : public Error {
 public:
  ResonanceError(const std::string& msg, std::vector<int> voxels = {})
      : Error(msg), voxels_(std::move(voxels)) {}
  const std::vector<int>& voxels() const { return voxels_; }

 private:
  std::vector<int> voxels_;
};

class DominanceError : public Error {
 public:
  DominanceError(const std::string& msg, double ratio)
      : Error(msg), ratio_(ratio) {}
  double ratio() const { return ratio_; }

 private:
  double ratio_;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& msg, int iterations)
      : Error(msg), iterations_(iterations) {}
  int iterations() const { return iterations_; }

 private:
  int iterations_;
};

class OverlapError : public Error {
 public:
  using Error::Error;
};

class PlacementError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  ConfigError(const std::string& msg, std::string pointer = "")
      : Error(pointer.empty() ? msg : msg + " (at " + pointer + ")"),
        pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

// No real root for H1 at the requested H2; carries the feasible H2 interval.
class InfeasibleH2Error : public Error {
 public:
  InfeasibleH2Error(const std::string& msg, double lo, double hi)
      : Error(msg), lo_(lo), hi_(hi) {}
  double feasible_lo() const { return lo_; }
  double feasible_hi() const { return hi_; }

 private:
  double lo_, hi_;
};

class InconsistentHError : public Error {
 public:
  using Error::Error;
};

class InfeasibleDesignError : public Error {
 public:
  using Error::Error;
};

// Special-function evaluation left the representable range.
class RangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace scatmat
