#pragma once

#include <stdexcept>
#include <string>

namespace hypercat {

// Base class for all library errors. CLI maps these to exit code 2.
class error : public std::runtime_error {
public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the convergence domain of a family, or an operation
// applied to a state/label it cannot represent (dim too small, degenerate
// sector, k not dividing N+1, ...).
class domain_error : public error {
public:
  explicit domain_error(const std::string& msg) : error(msg) {}
};

// Structurally invalid family: non-integer negative parameters, empty
// convergence domain (R = 0), poles hit inside the summation range.
class family_error : public error {
public:
  explicit family_error(const std::string& msg) : error(msg) {}
};

}  // namespace hypercat
