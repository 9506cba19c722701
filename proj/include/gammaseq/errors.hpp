#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gammaseq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix shape does not match the factor counts of the groups involved.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Maps whose sources and targets do not line up.
class SignatureError : public Error {
 public:
  using Error::Error;
};

/// A matrix that does not define a homomorphism between the given groups.
class InvalidHomomorphism : public Error {
 public:
  using Error::Error;
};

/// An operation that needs a finite group was handed one with free part.
class InfiniteGroup : public Error {
 public:
  using Error::Error;
};

/// An enumeration or table construction would exceed its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A caller-side precondition that is checked at runtime.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Ring tables that violate the ring axioms, or index maps that are not ring maps.
class RingAxiomError : public Error {
 public:
  using Error::Error;
};

/// Group expression syntax error, with the byte offset of the failure.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace gammaseq
