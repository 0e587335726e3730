#pragma once

#include <stdexcept>
#include <string>

namespace rbbg {

// Argument sits on a pole of Gamma, a Pochhammer ratio or an algebraic map.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Argument outside the documented domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Forbidden hypergeometric parameters (c a non-positive integer).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A series or iteration failed to reach the requested tolerance.
class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested evaluation region is not covered by the engine (real z >= 1).
class UnsupportedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Catalog lookup with an id that is not registered.
class UnknownIdError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace rbbg
