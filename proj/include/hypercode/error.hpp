#pragma once

#include <stdexcept>
#include <string>

namespace hypercode {

enum class ErrorCode {
  invalid_argument,
  index_out_of_range,
  dimension_mismatch,
  precondition,
  no_nonzero_codeword,
  resource_exhausted,
  parse,
  division_by_zero,
  engine_disagreement,
};

/// Base class for every error raised by the library. The code lets the C API
/// and the CLI map failures onto status values and exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

template <ErrorCode Code>
class TypedError : public Error {
 public:
  explicit TypedError(const std::string& what) : Error(Code, what) {}
};

using InvalidArgumentError = TypedError<ErrorCode::invalid_argument>;
using IndexError = TypedError<ErrorCode::index_out_of_range>;
using DimensionError = TypedError<ErrorCode::dimension_mismatch>;
using PreconditionError = TypedError<ErrorCode::precondition>;
using NoCodewordError = TypedError<ErrorCode::no_nonzero_codeword>;
using ResourceError = TypedError<ErrorCode::resource_exhausted>;
using ParseError = TypedError<ErrorCode::parse>;
using DivisionByZeroError = TypedError<ErrorCode::division_by_zero>;
using EngineDisagreementError = TypedError<ErrorCode::engine_disagreement>;

}  // namespace hypercode
