#pragma once

#include <stdexcept>
#include <string>

namespace lusky {

// Base class for all domain failures raised by the library.  The CLI maps
// any lusky::Error to exit code 1; argument-parsing problems exit with 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A computation asked for data beyond the stored horizon P.  Raised instead
// of silently extrapolating: every sequence is a finite prefix and results
// are only claimed on that prefix.
class HorizonError : public Error {
 public:
  explicit HorizonError(const std::string& what) : Error(what) {}
};

}  // namespace lusky
