#pragma once

#include <stdexcept>
#include <string>

namespace soliton {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SOLITON_DECLARE_ERROR(Name) \
  class Name : public Error {       \
   public:                          \
    using Error::Error;             \
  }

SOLITON_DECLARE_ERROR(NonPositiveArgument);
SOLITON_DECLARE_ERROR(DomainError);
SOLITON_DECLARE_ERROR(QuadratureNoConvergence);
SOLITON_DECLARE_ERROR(NonFiniteIntegrand);
SOLITON_DECLARE_ERROR(DimensionUnsupported);
SOLITON_DECLARE_ERROR(LengthMismatch);
SOLITON_DECLARE_ERROR(DegenerateMetric);
SOLITON_DECLARE_ERROR(BranchJump);
SOLITON_DECLARE_ERROR(BranchPoint);
SOLITON_DECLARE_ERROR(AlphaNotOne);
SOLITON_DECLARE_ERROR(TimeOrder);
SOLITON_DECLARE_ERROR(NonPositive);
SOLITON_DECLARE_ERROR(BesselDomain);
SOLITON_DECLARE_ERROR(InvalidParams);

#undef SOLITON_DECLARE_ERROR

}  // namespace soliton
