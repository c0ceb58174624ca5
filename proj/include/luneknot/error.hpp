#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace luneknot {

enum class ErrorCode {
  DuplicateEdgeUse,
  EmptyInput,
  Disconnected,
  PositiveGenus,
  NotFourRegular,
  NotLuneFree,
  TooSmall,
  ImproperColoring,
  BadSize,
  BadParams,
  BadSite,
  InadmissibleSite,
  NotDegreeThree,
  NotSpecial,
  Unrealizable,
  DisconnectedClosure,
  CeilingExceeded,
  Mismatch,
  SyntaxError,
  EdgeCountError,
  NotSimple,
  NotThreeConnected,
  SingularSystem,
  ConstructionFailed,
  DataFile,
};

std::string_view to_string(ErrorCode code);

/// Domain error carrying a machine-readable code. Every failure raised by the
/// library is one of these; the CLI maps them to exit status 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace luneknot
