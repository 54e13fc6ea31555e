#pragma once

#include <stdexcept>
#include <string>

namespace aaj {

/// Base of every error thrown by the library. `kind()` is the stable name
/// used in structured CLI messages.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept { return "Error"; }
};

#define AAJ_DEFINE_ERROR(Name)                                          \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& what) : Error(what) {}             \
    const char* kind() const noexcept override { return #Name; }        \
  }

AAJ_DEFINE_ERROR(UnitError);
AAJ_DEFINE_ERROR(EmptyError);
AAJ_DEFINE_ERROR(OverflowError);
AAJ_DEFINE_ERROR(ParseError);
AAJ_DEFINE_ERROR(ValidationError);
AAJ_DEFINE_ERROR(SplitError);
AAJ_DEFINE_ERROR(IndexError);
AAJ_DEFINE_ERROR(CapError);
AAJ_DEFINE_ERROR(InternalError);
AAJ_DEFINE_ERROR(NotApplicableError);
AAJ_DEFINE_ERROR(AlreadyAlternatingError);
AAJ_DEFINE_ERROR(ParamError);

#undef AAJ_DEFINE_ERROR

}  // namespace aaj
