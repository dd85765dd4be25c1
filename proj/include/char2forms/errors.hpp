#pragma once

#include <stdexcept>
#include <string>

namespace char2forms {

/// Precondition or mathematical-domain violation (bad dimension, ctx
/// mismatch, division by zero, ...). CLI maps these to exit code 2.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input. CLI maps these to exit code 1.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace char2forms
