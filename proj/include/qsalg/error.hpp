#pragma once

#include <stdexcept>
#include <string>

namespace qsalg {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class UnknownSymbolError : public Error {
public:
  explicit UnknownSymbolError(const std::string &name)
      : Error("unknown parameter symbol '" + name + "'") {}
};

class DivisionByZeroError : public Error {
public:
  DivisionByZeroError() : Error("division by zero") {}
};

// Raised when a polynomial is required but a genuine rational function was
// produced (e.g. an antiderivative of 1/z, or a module image that does not
// clear its denominator).
class NonPolynomialError : public Error {
public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
public:
  using Error::Error;
};

// The operator is not of the form -A*I d^2 - B d - C.
class NonSchrodingerFormError : public Error {
public:
  using Error::Error;
};

class NonNumericError : public Error {
public:
  using Error::Error;
};

} // namespace qsalg
