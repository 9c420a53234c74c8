#pragma once

#include <stdexcept>
#include <string>

namespace alphadg {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments or input data (bad arc, alpha out of range, bad partition).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates an operation's precondition, e.g. a digraph
// that is not strongly connected where Perron data is required.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Power iteration hit its iteration cap; carries the last enclosure.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double lo, double hi)
      : Error(what), lo_(lo), hi_(hi) {}

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

 private:
  double lo_;
  double hi_;
};

}  // namespace alphadg
