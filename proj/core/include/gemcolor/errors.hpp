#ifndef GEMCOLOR_ERRORS_HPP
#define GEMCOLOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gemcolor {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data is structurally invalid (bad endpoint, self-loop, parse error).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedPattern : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

/// The exact chromatic-number search refused an instance above its size limit.
class SizeGuardrail : public Error {
 public:
  using Error::Error;
};

/// A randomized generator ran out of attempts.
class SamplingFailure : public Error {
 public:
  using Error::Error;
};

/// A deterministic construction failed its own self-check.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace gemcolor

#endif  // GEMCOLOR_ERRORS_HPP
