#pragma once

#include <stdexcept>
#include <string>

namespace wreg {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// -- input validation --------------------------------------------------------

struct EmptyWeights : Error {
  EmptyWeights() : Error("weights: empty sequence") {}
};

struct NonPositiveWeight : Error {
  explicit NonPositiveWeight(long long w)
      : Error("weights: entry " + std::to_string(w) + " is not positive") {}
};

struct NotDecreasing : Error {
  NotDecreasing() : Error("weights: entries must be in decreasing order") {}
};

struct WrongWeights : Error {
  explicit WrongWeights(const std::string& msg) : Error("weights: " + msg) {}
};

// -- linear algebra -----------------------------------------------------------

struct NotAComplex : Error {
  explicit NotAComplex(const std::string& msg = "composition is not zero")
      : Error("not a complex: " + msg) {}
};

struct BadPrime : Error {
  explicit BadPrime(const std::string& msg) : Error("bad prime: " + msg) {}
};

struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& msg) : Error("shape mismatch: " + msg) {}
};

// -- sheaf model --------------------------------------------------------------

struct DegreeMismatch : Error {
  explicit DegreeMismatch(const std::string& msg) : Error("degree mismatch: " + msg) {}
};

struct InvalidMonad : Error {
  explicit InvalidMonad(const std::string& msg) : Error("invalid monad: " + msg) {}
};

struct DimensionTooSmall : Error {
  explicit DimensionTooSmall(const std::string& msg)
      : Error("ambient dimension too small: " + msg) {}
};

struct RestrictionNotMonad : Error {
  explicit RestrictionNotMonad(const std::string& msg)
      : Error("restriction is not a monad: " + msg) {}
};

struct NotSplit : Error {
  explicit NotSplit(const std::string& msg)
      : Error("expression is not a split bundle: " + msg) {}
};

// -- certification ------------------------------------------------------------

/// A stabilization-window search ran past its configured cap.  The result is
/// unknown, never silently truncated.
struct WindowExceeded : Error {
  explicit WindowExceeded(const std::string& msg) : Error("window cap exceeded: " + msg) {}
};

struct NoWregularTwist : Error {
  explicit NoWregularTwist(const std::string& msg)
      : Error("no wregular twist found: " + msg) {}
};

/// Raised in strict mode when a computation would rely on an "unverified"
/// certificate.
struct StrictUnverified : Error {
  explicit StrictUnverified(const std::string& msg)
      : Error("unverified certificate in strict mode: " + msg) {}
};

struct PreconditionFailed : Error {
  explicit PreconditionFailed(const std::string& msg) : Error("precondition failed: " + msg) {}
};

// -- documents ----------------------------------------------------------------

struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t position)
      : Error("parse error at position " + std::to_string(position) + ": " + msg),
        pos(position) {}
  explicit ParseError(const std::string& msg) : Error("parse error: " + msg), pos(0) {}
  std::size_t pos;
};

struct DocumentError : Error {
  explicit DocumentError(const std::string& msg) : Error("document error: " + msg) {}
};

}  // namespace wreg
