#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qtn {

/// Base class for all library errors. `code()` matches the CLI exit codes.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what, int code) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

/// Malformed input: bad schema, unresolved references, dimension mismatches.
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& what) : Error(what, 2) {}
  SchemaError(const std::string& what, std::vector<std::string> details)
      : Error(what, 2), details_(std::move(details)) {}
  const std::vector<std::string>& details() const { return details_; }

 private:
  std::vector<std::string> details_;
};

/// Singular algebraic loop or other ill-posed interconnection.
class IllPosedError : public Error {
 public:
  IllPosedError(const std::string& what, double smallest_singular_value)
      : Error(what, 3), sv_(smallest_singular_value) {}
  double smallest_singular_value() const { return sv_; }

 private:
  double sv_;
};

/// Numerical failure: pole proximity, overflow, solver non-convergence.
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what) : Error(what, 4) {}
};

}  // namespace qtn
