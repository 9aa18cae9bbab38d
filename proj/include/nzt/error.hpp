#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nzt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed program or proposition text; `offset()` is a byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Well-formed text naming a register/command pair that is not a basic instruction
/// (e.g. `in:1.set:0`).
class SemanticError : public Error {
 public:
  SemanticError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration was refused because it exceeds the configured bound.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace nzt
