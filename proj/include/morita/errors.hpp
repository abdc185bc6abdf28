#ifndef MORITA_ERRORS_HPP_
#define MORITA_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace morita {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value failed one of its structural invariants (associativity, action
// relations, intertwining, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Operands live over different algebras, sides or fields.
class MismatchError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Two independent routes to the same verdict disagreed.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class WindowError : public Error {
 public:
  using Error::Error;
};

}  // namespace morita

#endif  // MORITA_ERRORS_HPP_
