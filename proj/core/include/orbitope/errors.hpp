#pragma once

#include <stdexcept>
#include <string>

namespace orbitope {

// Base of every domain error raised by the library. kind() is the stable,
// machine-readable name used in CLI error JSON.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept = 0;
};

#define ORBITOPE_DECLARE_ERROR(Name)                                   \
  class Name : public Error {                                          \
   public:                                                             \
    using Error::Error;                                                \
    const char* kind() const noexcept override { return #Name; }       \
  }

ORBITOPE_DECLARE_ERROR(ShapeError);        // matrix violates the algebra's linear constraints
ORBITOPE_DECLARE_ERROR(ComputationError);  // eigensolver / SVD failure
ORBITOPE_DECLARE_ERROR(SizeError);         // a configured dimension cap would be exceeded
ORBITOPE_DECLARE_ERROR(RangeError);        // index parameter out of range
ORBITOPE_DECLARE_ERROR(ChamberError);      // point outside the closed Weyl chamber
ORBITOPE_DECLARE_ERROR(SolveError);        // no positive-definite Gram matrix found
ORBITOPE_DECLARE_ERROR(FamilyMismatch);    // operands belong to different families
ORBITOPE_DECLARE_ERROR(ConsistencyError);  // two independent computation paths disagree
ORBITOPE_DECLARE_ERROR(NotAFace);
ORBITOPE_DECLARE_ERROR(ZeroFunctional);
ORBITOPE_DECLARE_ERROR(NumericalError);    // LP cycling past the iteration cap
ORBITOPE_DECLARE_ERROR(InputError);        // malformed or invalid serialized input
ORBITOPE_DECLARE_ERROR(UsageError);        // malformed command-line mini-language

#undef ORBITOPE_DECLARE_ERROR

}  // namespace orbitope
