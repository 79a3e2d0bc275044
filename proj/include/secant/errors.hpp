#pragma once

#include <stdexcept>
#include <string>

namespace secant {

// Operands from different fields (modes or primes) were combined.
class FieldMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZeroError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Vector length / matrix extent / variable count disagreement.
class DimensionMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An argument lies outside the documented domain of an operation.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidFieldConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CatalogKeyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DegenerateProjectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RankDeficientError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A sampled parameter point is special (zero image or rank drop).
class DegeneratePointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The resampling budget for generic points ran out.
class ResampleExhaustedError : public std::runtime_error {
 public:
  ResampleExhaustedError(std::string stage, const std::string& detail)
      : std::runtime_error("resample budget exhausted in stage '" + stage +
                           "': " + detail),
        stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

// The random center of an isomorphic projection met the secant variety.
class ProjectionHitSecantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace secant
