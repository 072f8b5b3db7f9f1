#pragma once

#include <stdexcept>
#include <string>

namespace metacyclic {

// Raised when a presentation fails the defining congruences.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an exhaustive computation would exceed its configured budget.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace metacyclic
