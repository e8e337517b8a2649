#pragma once

#include <stdexcept>
#include <string>

namespace srbfn {

// Every failure the library can signal. The C boundary maps these 1:1 onto
// integer status codes, so keep the set closed and additive.
enum class ErrorCode {
  FileNotFound = 1,
  MalformedCsv,
  EmptyAfterCleaning,
  ShapeMismatch,
  InsufficientRows,
  InvalidFoldCount,
  DegenerateConfig,
  InvalidConfig,
  NotPositiveDefinite,
  NumericalDivergence,
  InsufficientObservations,
  EmptyResults,
  SchemaMismatch,
  IoError,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace srbfn
