#pragma once

#include <stdexcept>
#include <string>

namespace floerhp {

// Error taxonomy, mirrored by the CLI exit codes:
//   PreconditionError -> exit 2 (caller asked for something the math refuses)
//   DataError         -> exit 3 (malformed knot database / input files)
//   InternalError     -> exit 4 (inconsistent data slipped past validation,
//                                or an invariant the code relies on failed)
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DataError : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

class CoefficientMismatch : public PreconditionError {
 public:
  CoefficientMismatch() : PreconditionError("CoefficientMismatch: graded groups carry different coefficient tags") {}
};

class ZeroSurgeryCoefficient : public PreconditionError {
 public:
  ZeroSurgeryCoefficient() : PreconditionError("ZeroSurgeryCoefficient: p = 0 has no p'-th root-of-unity test") {}
};

class UnsupportedSummand : public PreconditionError {
 public:
  UnsupportedSummand() : PreconditionError("UnsupportedSummand: summand lacks a monomial longitude rule") {}
};

// A root-counting equation whose solution set is not finite (M^0 = 1).
class PositiveDimensional : public PreconditionError {
 public:
  PositiveDimensional() : PreconditionError("PositiveDimensional: every eigenvalue solves the surgery equation") {}
};

class NotCoprime : public PreconditionError {
 public:
  NotCoprime(long long p, long long q)
      : PreconditionError("NotCoprime: " + std::to_string(p) + "/" + std::to_string(q) +
                          " is not a reduced slope") {}
};

enum class AdmissibilityFailure { BoundarySlope, IrregularSlope, AlexanderRoot };

inline const char* to_string(AdmissibilityFailure f) {
  switch (f) {
    case AdmissibilityFailure::BoundarySlope: return "BoundarySlope";
    case AdmissibilityFailure::IrregularSlope: return "IrregularSlope";
    case AdmissibilityFailure::AlexanderRoot: return "AlexanderRoot";
  }
  return "?";
}

class NonAdmissible : public PreconditionError {
 public:
  explicit NonAdmissible(AdmissibilityFailure reason)
      : PreconditionError(std::string("NonAdmissible: ") + to_string(reason)), reason_(reason) {}
  AdmissibilityFailure reason() const { return reason_; }

 private:
  AdmissibilityFailure reason_;
};

class NotSmallKnot : public PreconditionError {
 public:
  explicit NotSmallKnot(const std::string& name)
      : PreconditionError("NotSmallKnot: '" + name + "' is not marked small") {}
};

class NotTwoBridge : public PreconditionError {
 public:
  explicit NotTwoBridge(const std::string& name)
      : PreconditionError("NotTwoBridge: '" + name + "' carries no two-bridge parameters") {}
};

class UnsupportedDegree : public PreconditionError {
 public:
  explicit UnsupportedDegree(int degree)
      : PreconditionError("UnsupportedDegree: limit invariants exist only in degrees 0 and -1, got " +
                          std::to_string(degree)) {}
};

// Exact arithmetic produced a non-integral (or negative) count where an
// integer was required; the ingested knot data is inconsistent.
class NonIntegerResult : public InternalError {
 public:
  explicit NonIntegerResult(const std::string& what) : InternalError("NonIntegerResult: " + what) {}
};

}  // namespace floerhp
