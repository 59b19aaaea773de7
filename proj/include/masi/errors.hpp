#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace masi {

enum class ErrorKind {
  NotHermitian,
  NoConvergence,
  DimensionOverflow,
  DimensionMismatch,
  NotPSD,
  UnsupportedDimension,
  DomainError,
  InvalidSpectrum,
  NumericalError,
  InvalidSampleCount,
  InvalidSpec,
  FileError,
  NotPure,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` carries the failure class
/// so callers (the CLI in particular) can map it onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace masi
