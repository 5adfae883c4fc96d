#pragma once

#include <stdexcept>
#include <string>

namespace kron {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (partitions, weights, H-representations).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A precondition or structural invariant does not hold.
class InvariantError : public Error {
 public:
  using Error::Error;
};

// A polytope section whose relaxation is unbounded in some coordinate.
class UnboundedError : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

class InfeasibleError : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

[[noreturn]] void throw_invariant(const std::string& what);
[[noreturn]] void throw_parse(const std::string& what);

}  // namespace kron
