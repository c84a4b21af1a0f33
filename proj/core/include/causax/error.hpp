#pragma once

#include <stdexcept>
#include <string>

namespace causax {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: duplicate names, cycles, bad query shape, bad params.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A node name that is not part of the graph.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// A generator could not satisfy its constraints.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds what an exhaustive routine is willing to enumerate.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class EncodingError : public Error {
 public:
  EncodingError(const std::string& what, char32_t offending, std::size_t offset)
      : Error(what), offending_(offending), offset_(offset) {}

  char32_t offending() const noexcept { return offending_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  char32_t offending_;
  std::size_t offset_;
};

class DecodingError : public Error {
 public:
  using Error::Error;
};

/// Text that does not follow the instance grammar.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace causax
