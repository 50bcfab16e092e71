#pragma once

#include <stdexcept>
#include <string>

namespace wittlink {

/// Base class for every error raised at the library boundary.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
   public:
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error("division by zero: " + what) {}
};

class DomainError : public Error {
   public:
    using Error::Error;
};

class ParseError : public Error {
   public:
    using Error::Error;
};

/// Raised when a specialization produces a degenerate form (CLI exit code 3).
class DegenerateError : public Error {
   public:
    using Error::Error;
};

}  // namespace wittlink
