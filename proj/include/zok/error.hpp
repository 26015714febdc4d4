#pragma once

#include <stdexcept>
#include <string>

#include "zok/rational.hpp"

namespace zok {

// Three families, matching the CLI exit codes: a mathematical negative
// verdict (1), bad input (2), and a broken internal invariant (3).

class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "MathError"; }
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "InputError"; }
};

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define ZOK_DEFINE_ERROR(Name, Base)                         \
  class Name : public Base {                                 \
   public:                                                   \
    using Base::Base;                                        \
    const char* kind() const noexcept override { return #Name; } \
  }

ZOK_DEFINE_ERROR(NotPseudoEffective, MathError);
ZOK_DEFINE_ERROR(NotBig, MathError);
ZOK_DEFINE_ERROR(NotNef, MathError);
ZOK_DEFINE_ERROR(NotOnBoundary, MathError);
ZOK_DEFINE_ERROR(HypothesisViolated, MathError);
ZOK_DEFINE_ERROR(FlagInNonKahlerLocus, MathError);
ZOK_DEFINE_ERROR(UnsupportedDirection, MathError);
ZOK_DEFINE_ERROR(SingularMatrix, MathError);
ZOK_DEFINE_ERROR(MultipleCandidates, MathError);

ZOK_DEFINE_ERROR(DimensionMismatch, InputError);
ZOK_DEFINE_ERROR(NonSymmetric, InputError);
ZOK_DEFINE_ERROR(UnknownCurve, InputError);
ZOK_DEFINE_ERROR(InvalidFlag, InputError);
ZOK_DEFINE_ERROR(NonConvexPolygon, InputError);
ZOK_DEFINE_ERROR(ParseError, InputError);
ZOK_DEFINE_ERROR(PreconditionFailed, InputError);
ZOK_DEFINE_ERROR(TooManyCurves, InputError);
ZOK_DEFINE_ERROR(IncompatibleFields, InputError);
ZOK_DEFINE_ERROR(GenerationFailure, InputError);
ZOK_DEFINE_ERROR(InvalidModel, InputError);

#undef ZOK_DEFINE_ERROR

// Carries the exact threshold min a_i / b_i above which the closed-form
// perturbation stops being a decomposition.
class EpsilonTooLarge : public MathError {
 public:
  EpsilonTooLarge(const std::string& msg, Rat threshold)
      : MathError(msg), threshold_(std::move(threshold)) {}
  const char* kind() const noexcept override { return "EpsilonTooLarge"; }
  const Rat& threshold() const noexcept { return threshold_; }

 private:
  Rat threshold_;
};

}  // namespace zok
