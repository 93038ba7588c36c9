#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace curvlab {

// Base class for everything this library throws on bad input.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A (0,4) tensor failed one of the curvature symmetry checks.
// Carries which identity failed, the worst offending index (0-based), and the
// violation magnitude so callers can report precisely.
class SymmetryViolation : public Error {
 public:
  SymmetryViolation(std::string identity, std::vector<int> index, double magnitude,
                    double tolerance);
  const std::string& identity() const { return identity_; }
  const std::vector<int>& index() const { return index_; }
  double magnitude() const { return magnitude_; }
  double tolerance() const { return tolerance_; }

 private:
  std::string identity_;
  std::vector<int> index_;
  double magnitude_;
  double tolerance_;
};

// Operation needs a larger dimension than the supplied space provides
// (e.g. the orthogonal decomposition divides by n-2).
class DimensionTooSmall : public Error {
 public:
  using Error::Error;
};

// The Hessian-based weight is undefined at middle degree n = 2p.
class MiddleDegree : public Error {
 public:
  using Error::Error;
};

// Degree p outside the admissible range for the requested operation.
class DegreeOutOfRange : public Error {
 public:
  using Error::Error;
};

// A symmetric form that must be trace-free is not.
class NotTraceFree : public Error {
 public:
  using Error::Error;
};

// A curvature tensor that must have vanishing Ricci contraction does not.
class NotWeyl : public Error {
 public:
  using Error::Error;
};

// Gallery lookup with a name outside the published list.
class UnknownExample : public Error {
 public:
  using Error::Error;
};

// JSON input did not match the expected schema; `path` names the offending
// field, e.g. "curvature.components[5]".
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& msg);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace curvlab
