#pragma once

#include <stdexcept>
#include <string>

namespace simcube {

// Malformed textual input (rational literals, simplex documents).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Node matrix of a would-be simplex is singular.
class DegenerateSimplexError : public std::runtime_error {
public:
  explicit DegenerateSimplexError(const std::string& what)
      : std::runtime_error(what) {}
};

// Exact elimination hit a singular matrix.
class SingularMatrixError : public std::runtime_error {
public:
  explicit SingularMatrixError(const std::string& what)
      : std::runtime_error(what) {}
};

// Input outside the domain of an operation (point not in the cube,
// parameter outside a family's range, invalid search config).
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Requested Hadamard order has no supported construction.
class UnsupportedOrderError : public std::runtime_error {
public:
  explicit UnsupportedOrderError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace simcube
