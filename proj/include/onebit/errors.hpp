#pragma once

#include <stdexcept>
#include <string>

namespace onebit {

// Numerical failure (non-finite integrand, solver breakdown, ...).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Requested an operation the object cannot provide (e.g. derivative of a
// nonsmooth loss).
class CapabilityError : public std::logic_error {
 public:
  explicit CapabilityError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace onebit
