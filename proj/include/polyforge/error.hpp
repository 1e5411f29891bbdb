#pragma once

#include <stdexcept>
#include <string>

namespace polyforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define POLYFORGE_ERROR(Name)                  \
  class Name : public Error {                  \
   public:                                     \
    explicit Name(const std::string& what)     \
        : Error(std::string(#Name ": ") + what) {} \
  }

POLYFORGE_ERROR(BudgetExceeded);
POLYFORGE_ERROR(UnknownVariable);
POLYFORGE_ERROR(UnboundVariable);
POLYFORGE_ERROR(MalformedExpression);
POLYFORGE_ERROR(ParseError);
POLYFORGE_ERROR(EvaluationOnly);
POLYFORGE_ERROR(ZeroArgument);
POLYFORGE_ERROR(NotInImage);
POLYFORGE_ERROR(IncompatibleSpaces);
POLYFORGE_ERROR(DimensionMismatch);
POLYFORGE_ERROR(OutOfRange);
POLYFORGE_ERROR(SpaceMismatch);
POLYFORGE_ERROR(ShapeMismatch);
POLYFORGE_ERROR(AssignmentMismatch);
POLYFORGE_ERROR(DegenerateKernel);
POLYFORGE_ERROR(RefinementExhausted);
POLYFORGE_ERROR(NotOnSphere);

#undef POLYFORGE_ERROR

}  // namespace polyforge
