#pragma once

#include <stdexcept>
#include <string>

namespace qsmon {

// Bad caller input: malformed files, violated preconditions, domain errors.
class InvalidInputError : public std::invalid_argument {
 public:
  explicit InvalidInputError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Problem size beyond what the dense algorithms here are meant for.
class CapabilityError : public InvalidInputError {
 public:
  explicit CapabilityError(const std::string& what) : InvalidInputError(what) {}
};

// A computation on valid input lost too much accuracy to be trusted.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace qsmon
