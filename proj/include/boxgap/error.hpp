#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace boxgap {

// Precondition violated by an argument (illegal word, x <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Invalid GridConfig / preset / JSON document.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Work or memory estimate exceeds the configured budget.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(const std::string& what, double projected)
      : std::runtime_error(what), projected_(projected) {}

  double projected() const noexcept { return projected_; }

 private:
  double projected_;
};

}  // namespace boxgap
