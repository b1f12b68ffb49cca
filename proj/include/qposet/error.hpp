#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qposet {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The transitive closure of the supplied relations is not irreflexive.
class CycleInInput : public Error {
 public:
  using Error::Error;
};

class NotComparable : public Error {
 public:
  using Error::Error;
};

class NotAnEdge : public Error {
 public:
  using Error::Error;
};

class NotAMaximalChain : public Error {
 public:
  using Error::Error;
};

class InvalidWalk : public Error {
 public:
  using Error::Error;
};

/// A cycle whose up/down steps do not cancel has no height labeling.
class NotConsistent : public Error {
 public:
  using Error::Error;
};

class WalkNotEligible : public Error {
 public:
  using Error::Error;
};

/// The point set does not affinely span the ambient space.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// A supporting hyperplane passes through the origin, so the origin is not
/// an interior point.
class OriginOnHyperplane : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string file, std::size_t line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what),
        file_(std::move(file)),
        line_(line) {}

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

}  // namespace qposet
