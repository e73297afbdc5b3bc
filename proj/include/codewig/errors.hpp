#ifndef CODEWIG_ERRORS_HPP
#define CODEWIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace codewig {

/// Bad argument or configuration (CLI exit code 2).
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// A brute-force budget would be exceeded (CLI exit code 3).
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical precondition on a matrix argument does not hold.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

/// An iterative method hit its iteration limit.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace codewig

#endif  // CODEWIG_ERRORS_HPP
