#ifndef SEPCODES_ERRORS_HPP_
#define SEPCODES_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sepcodes {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPrimePower : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class NotASubspace : public Error {
 public:
  using Error::Error;
};

class NotASubgroup : public Error {
 public:
  using Error::Error;
};

class DegreeTooHigh : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class SingleWord : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

// Thrown by the exponential deciders when the (virtual) enumeration would
// exceed the caller-supplied budget. `estimate` is the total instance count
// of the full enumeration, saturated at 2^64-1.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t estimate)
      : Error(what), estimate(estimate) {}
  std::uint64_t estimate;
};

class CoverFailed : public Error {
 public:
  using Error::Error;
};

class ConstantPolynomial : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class BadParameters : public Error {
 public:
  using Error::Error;
};

class NoCoincidence : public Error {
 public:
  using Error::Error;
};

}  // namespace sepcodes

#endif  // SEPCODES_ERRORS_HPP_
