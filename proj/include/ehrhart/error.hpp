#pragma once

#include <stdexcept>
#include <string>

namespace ehrhart {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define EHRHART_DEFINE_ERROR(Name)         \
  class Name : public Error {              \
   public:                                 \
    explicit Name(const std::string& what) \
        : Error(#Name ": " + what) {}      \
  }

EHRHART_DEFINE_ERROR(DimensionMismatch);
EHRHART_DEFINE_ERROR(Infeasible);
EHRHART_DEFINE_ERROR(BudgetExceeded);
EHRHART_DEFINE_ERROR(DimensionCapExceeded);
EHRHART_DEFINE_ERROR(BadApex);
EHRHART_DEFINE_ERROR(MissingIntersection);
EHRHART_DEFINE_ERROR(VerificationFailed);
EHRHART_DEFINE_ERROR(NonterminatingNumerator);
EHRHART_DEFINE_ERROR(Rejected);
EHRHART_DEFINE_ERROR(NotAvailable);
EHRHART_DEFINE_ERROR(SizeMismatch);
EHRHART_DEFINE_ERROR(UnverifiedSolution);
EHRHART_DEFINE_ERROR(ParseError);

#undef EHRHART_DEFINE_ERROR

}  // namespace ehrhart
