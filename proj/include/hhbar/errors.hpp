#pragma once

#include <stdexcept>
#include <string>

namespace hhbar {

// Bad run configuration (unknown keys, unwritable paths, invalid field values).
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure during a computation that started from a valid configuration.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Every overlap eigenvalue fell below the conditioning cutoff.
class basis_collapse_error : public numerical_error {
 public:
  explicit basis_collapse_error(const std::string& msg) : numerical_error(msg) {}
};

// Tail-constant calibration could not determine the requested parameters.
class calibration_error : public numerical_error {
 public:
  explicit calibration_error(const std::string& msg) : numerical_error(msg) {}
};

class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hhbar
