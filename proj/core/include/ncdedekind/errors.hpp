#pragma once

#include <stdexcept>
#include <string>

namespace ncdedekind {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A numeric procedure could not reach its accuracy target.
class NumericError : public Error {
 public:
  using Error::Error;
};

#define NCDEDEKIND_DEFINE_ERROR(Name, Base) \
  class Name : public Base {                \
   public:                                  \
    using Base::Base;                       \
  }

NCDEDEKIND_DEFINE_ERROR(NotCoprime, DomainError);
NCDEDEKIND_DEFINE_ERROR(BadMatrix, DomainError);
NCDEDEKIND_DEFINE_ERROR(ZeroDenominator, DomainError);
NCDEDEKIND_DEFINE_ERROR(BadModulus, DomainError);
NCDEDEKIND_DEFINE_ERROR(UnsupportedWeight, DomainError);
NCDEDEKIND_DEFINE_ERROR(PTooLarge, DomainError);
NCDEDEKIND_DEFINE_ERROR(EmptySequence, Error);
NCDEDEKIND_DEFINE_ERROR(InvalidMove, Error);
NCDEDEKIND_DEFINE_ERROR(ShapeMismatch, Error);
NCDEDEKIND_DEFINE_ERROR(BadConstantTerm, Error);
NCDEDEKIND_DEFINE_ERROR(InsufficientTerms, Error);
NCDEDEKIND_DEFINE_ERROR(BadPath, Error);
NCDEDEKIND_DEFINE_ERROR(RelationViolation, Error);
NCDEDEKIND_DEFINE_ERROR(HeightTooLow, NumericError);
NCDEDEKIND_DEFINE_ERROR(NotConverged, NumericError);

#undef NCDEDEKIND_DEFINE_ERROR

}  // namespace ncdedekind
