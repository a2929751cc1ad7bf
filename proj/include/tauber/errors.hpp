#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tauber {

class BoundsError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested tolerance cannot be met within the configured term/segment cap.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double required_n)
      : std::runtime_error(what), required_n_(required_n) {}
  double required_n() const { return required_n_; }

 private:
  double required_n_;
};

class SupportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two evaluation paths that must agree did not; signals a bug, not bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tauber
