#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "regcat/rational.hpp"

namespace regcat {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

#define REGCAT_DEFINE_ERROR(Name)        \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  };

  REGCAT_DEFINE_ERROR(DimensionMismatch)
  REGCAT_DEFINE_ERROR(NotADirectSum)
  REGCAT_DEFINE_ERROR(SingularMatrix)
  REGCAT_DEFINE_ERROR(NotAnInnerInverse)
  REGCAT_DEFINE_ERROR(NotAGeneralizedInverse)
  REGCAT_DEFINE_ERROR(OddChainLength)
  REGCAT_DEFINE_ERROR(NotNRegular)
  REGCAT_DEFINE_ERROR(TheoremContradiction)
  REGCAT_DEFINE_ERROR(UnknownName)
  REGCAT_DEFINE_ERROR(DuplicateName)
  REGCAT_DEFINE_ERROR(PreconditionViolated)
  REGCAT_DEFINE_ERROR(RetractionFailure)
  REGCAT_DEFINE_ERROR(SmallCycleNotTrivial)
  REGCAT_DEFINE_ERROR(LengthMismatch)
  REGCAT_DEFINE_ERROR(ImageNotACocycle)
  REGCAT_DEFINE_ERROR(InvariantViolation)
  REGCAT_DEFINE_ERROR(NotRegularAlgebra)
  REGCAT_DEFINE_ERROR(NotMultiplicative)
  REGCAT_DEFINE_ERROR(BoundaryMismatch)
  REGCAT_DEFINE_ERROR(NoOppositeDeclared)
  REGCAT_DEFINE_ERROR(UnassignedLabel)
  REGCAT_DEFINE_ERROR(UnassignedGenerator)
  REGCAT_DEFINE_ERROR(ShapeMismatch)
  REGCAT_DEFINE_ERROR(InternalError)

#undef REGCAT_DEFINE_ERROR

  //! Thrown when a cyclic regularity identity fails. Carries the 1-based
  //! index of the offending arrow and a basis vector on which the two sides
  //! of the identity differ.
  class NotRegular : public Error {
   public:
    NotRegular(std::string const& what, std::size_t index, std::vector<Rational> witness)
        : Error(what), _index(index), _witness(std::move(witness)) {}

    std::size_t index() const noexcept { return _index; }
    std::vector<Rational> const& witness() const noexcept { return _witness; }

   private:
    std::size_t _index;
    std::vector<Rational> _witness;
  };

}  // namespace regcat
