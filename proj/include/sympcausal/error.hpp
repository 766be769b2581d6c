#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sympcausal {

enum class ErrorKind {
  OddDimension,
  DimensionMismatch,
  NotSymplectic,
  NotHamiltonian,
  OutsideCone,
  SignatureDegenerate,
  NotElliptic,
  NotConnectable,
  NotCausal,
  ZeroDirection,
  DriftExceeded,
  RegionExit,
  MatchingAmbiguous,
  InvalidArgument,
  MalformedInput,
};

std::string_view to_string(ErrorKind kind);

// All domain failures are reported through this type; `kind()` is stable and
// is what the CLI maps to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sympcausal
