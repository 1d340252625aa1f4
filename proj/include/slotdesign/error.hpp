#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slotdesign {

enum class ErrorKind {
  InfeasibleStats,
  DegenerateSample,
  InvalidArgument,
  OutOfRange,
  UndefinedWitness,
  TooLarge,
  InsufficientSamples,
  MissingSamples,
  CapacityTooSmall,
  LpInfeasible,
  LpUnbounded,
  Io,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported through this type; the CLI maps it to exit code 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace slotdesign
