#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace icl {

/// Malformed or inconsistent user input (graph files, code files, parameters).
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graph text that fails to parse. `line()` is 1-based; 0 when not tied to a line.
class ParseError : public InvalidInput {
 public:
  enum class Kind { Malformed, VertexOutOfRange, SelfLoop, DuplicateEdge };

  ParseError(Kind kind, std::size_t line, const std::string& what)
      : InvalidInput("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

/// An exact solver was asked to run on an instance above its configured size limit.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& solver, std::size_t size, std::size_t cap)
      : std::runtime_error(solver + ": instance size " + std::to_string(size) +
                           " exceeds cap " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::size_t size() const { return size_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

/// A constructed object failed an internal validity check (verification, certificate, bound).
class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace icl
