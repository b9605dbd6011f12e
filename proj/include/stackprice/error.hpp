#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stackprice {

enum class ErrorCode {
  ZeroOrNegativeWeight,
  ZeroCapacity,
  EmptyInstance,
  Overflow,
  Parse,
  UnknownField,
  ModelMismatch,
  ZeroConstraintWeightDivision,
  MissingAssignment,
  NegativeAssignedWeight,
  InvalidDecomposition,
  ChosenItemTooLarge,
  CapacityTooLarge,
  InstanceTooLargeForOracle,
  OddTotalSum,
  PartitionTooLarge,
  MTooSmall,
  ScaleTooSmall,
  PredictionRefuted,
};

std::string_view to_string(ErrorCode code);

// Every failure surfaced by the library carries a code so the CLI can map it
// to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace stackprice
