#pragma once

#include <stdexcept>
#include <string>

namespace dtile {

enum class ErrorCode {
  LoopEdge,
  TwoCycle,
  OutOfRange,
  SameVertex,
  ZeroSize,
  TooSmall,
  NotOriented,
  ZeroPart,
  PartTooSmall,
  BadParameters,
  DivisibleByThree,
  ZeroModulus,
  NotCoprime,
  BadTargets,
  BadSizes,
  NotTournament,
  BadDemand,
  NotAPartition,
  Overlap,
  BadSize,
  BadPattern,
  Parse,
  Io,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace dtile
