#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace g3 {

enum class ErrorCode {
  Syntax,
  UnknownIdentifier,
  Arity,
  Domain,
  Precondition,
  StraightSegment,
  SingularNormal,
  InadmissibleTrace,
  NotLineOfCurvature,
  NotAsymptotic,
  ConstraintViolated,
  ConstancyViolated,
  AxisUndefined,
  Io,
  Scene,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the kernel. `offset` is the byte offset into the
/// expression source for parse and domain errors, npos otherwise.
class Error : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(ErrorCode code, const std::string& message, std::size_t offset = npos)
      : std::runtime_error(message), code_(code), offset_(offset) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  ErrorCode code_;
  std::size_t offset_;
};

}  // namespace g3
