#pragma once

#include <stdexcept>
#include <string>

namespace ybg {

// Every guarded precondition surfaces as one of these codes; nothing in the
// library aborts or returns a poisoned value.
enum class Errc {
  DivisionByZero,
  DegenerateInput,
  ZeroN,
  DimensionMismatch,
  NotComposable,
  CZero,
  DerivedCZero,
  NotFreeFermionic,
  NotInOmega,
  NotBoundary,
  ZeroLabel,
  ObjectMismatch,
  NotInPhi,
  NotInPhiB,
  ExhaustedRetries,
  TagMismatch,
  IndexOutOfRange,
  SizeCap,
  ParseError,
  InvalidElement,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace ybg
