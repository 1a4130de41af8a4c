#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilmult {

/// Root of every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (bad JSON shape, invalid datum, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured size cap (basis size, group order, row count) was exceeded.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected,
             const std::string& message);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Two nilpotent elements from different (generator count, class) contexts.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// A homotopy degree the truncation cannot see.
class OutOfTruncationRange : public Error {
 public:
  using Error::Error;
};

class NotReduced : public Error {
 public:
  using Error::Error;
};

/// A directed system that never became eventually constant in its window.
class Unstabilized : public Error {
 public:
  using Error::Error;
};

/// A required field of a group datum is absent and cannot be computed.
class MissingData : public Error {
 public:
  explicit MissingData(std::string field);
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace nilmult
