#pragma once

#include <stdexcept>
#include <string>

namespace diracgap {

// Numerical failure carrying the achieved estimate where that is meaningful.
class IntegrationError : public std::runtime_error {
public:
  IntegrationError(const std::string& msg, double estimate, double achieved_error)
      : std::runtime_error(msg), estimate(estimate), achieved_error(achieved_error) {}
  double estimate;
  double achieved_error;
};

class IntegrabilityError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class UnsupportedOperationError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

class AssemblyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DegenerateBasisError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SolverError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ConstructionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace diracgap
