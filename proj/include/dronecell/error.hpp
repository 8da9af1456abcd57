#pragma once

#include <stdexcept>
#include <string>

namespace dronecell {

/// Input outside the domain of a model formula or configuration schema.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A numerical routine failed to reach its requested accuracy.
class NumericalError : public std::runtime_error {
public:
  NumericalError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

private:
  double residual_;
};

/// Configuration file is unreadable or does not match its schema.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace dronecell
