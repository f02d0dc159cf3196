#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cdiffsim {

// Reasons a parameter set or cleaning policy can be rejected.
enum class ValidationCode {
  AdmissionMixNotNormalized,
  ProbabilityOutOfRange,
  NegativeValue,
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationCode code, std::string field, const std::string& detail)
      : std::runtime_error(detail), code_(code), field_(std::move(field)) {}

  ValidationCode code() const { return code_; }
  const std::string& field() const { return field_; }

 private:
  ValidationCode code_;
  std::string field_;
};

class EmptyGroupError : public std::runtime_error {
 public:
  EmptyGroupError() : std::runtime_error("cannot summarize an empty group") {}
};

class UnknownExperimentError : public std::runtime_error {
 public:
  explicit UnknownExperimentError(int id)
      : std::runtime_error("unknown experiment id " + std::to_string(id) + " (expected 1, 2 or 3)") {}
};

class SeedCollisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CsvError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cdiffsim
