#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zdyn {

/// Failure categories raised by the library. The CLI maps these to exit codes.
enum class ErrorKind {
  ZeroInput,
  NotPrime,
  NotUnimodular,
  EigenSeparationFailure,
  UnknownAction,
  ParseError,
  ValidationError,
  DimensionUnsupported,
  NotANorm,
  ZeroExponent,
  InfiniteCount,
  InfiniteHull,
  NotExpansive,
  DegenerateSync,
  UnsupportedFamily,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace zdyn
