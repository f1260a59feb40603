#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace toric {

/// Base of every error raised by the library. The CLI maps these onto exit
/// codes, so each subclass corresponds to one failure kind.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define TORIC_DEFINE_ERROR(Name)                                               \
  class Name : public Error {                                                  \
  public:                                                                      \
    using Error::Error;                                                        \
  }

// linear algebra
TORIC_DEFINE_ERROR(NotFiniteError);
TORIC_DEFINE_ERROR(ZeroVectorError);
TORIC_DEFINE_ERROR(NotSaturatedError);
TORIC_DEFINE_ERROR(DimensionMismatch);

// polytopes
TORIC_DEFINE_ERROR(NotFullDimensional);
TORIC_DEFINE_ERROR(DuplicatePoint);
TORIC_DEFINE_ERROR(Unbounded);
TORIC_DEFINE_ERROR(EmptyPolytope);
TORIC_DEFINE_ERROR(InvalidPolytope);

// retractions and singularities
TORIC_DEFINE_ERROR(InvalidHint);
TORIC_DEFINE_ERROR(NotSimple);
TORIC_DEFINE_ERROR(NotGeneric);
TORIC_DEFINE_ERROR(NotAlmostSimple);
TORIC_DEFINE_ERROR(InvalidSequence);
TORIC_DEFINE_ERROR(DegenerateStep);

// symbolic
TORIC_DEFINE_ERROR(VarCountMismatch);
TORIC_DEFINE_ERROR(NegativeExponentError);

// cohomology
TORIC_DEFINE_ERROR(InconsistentSeries);
TORIC_DEFINE_ERROR(InvalidElement);

// input files
TORIC_DEFINE_ERROR(FormatError);

#undef TORIC_DEFINE_ERROR

/// Parse failure in polynomial text; `position` is the 0-based offset of the
/// offending character.
class SyntaxError : public Error {
public:
  SyntaxError(const std::string &what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace toric
