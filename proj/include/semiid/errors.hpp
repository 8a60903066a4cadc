#pragma once

#include <stdexcept>
#include <string>

namespace semiid {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Operands drawn from a different semiring instance than the one asked to
  // combine them (for example a -inf handed to the min-plus instance).
  class InstanceMismatch : public Error {
   public:
    using Error::Error;
  };

  // Operation needs structure the instance lacks (idempotency, interval).
  class UnsupportedStructure : public Error {
   public:
    using Error::Error;
  };

  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    using Error::Error;
  };

  // A result that a theorem guarantees did not materialise. Always a bug.
  class InconsistencyError : public Error {
   public:
    using Error::Error;
  };

  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

}  // namespace semiid
