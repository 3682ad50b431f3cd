#pragma once

#include <stdexcept>
#include <string>

namespace pd3 {

// Every failure raised by the library derives from Error so callers can
// catch the family while tests can still pin the precise kind.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PD3_DEFINE_ERROR(Name)          \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  }

PD3_DEFINE_ERROR(UnknownSymbol);
PD3_DEFINE_ERROR(ContextMismatch);
PD3_DEFINE_ERROR(InfiniteEnumeration);
PD3_DEFINE_ERROR(InvalidHom);
PD3_DEFINE_ERROR(NotACycle);
PD3_DEFINE_ERROR(NotInvertible);
PD3_DEFINE_ERROR(ShapeMismatch);
PD3_DEFINE_ERROR(InfiniteGroup);
PD3_DEFINE_ERROR(NotAComplex);
PD3_DEFINE_ERROR(GroupTooLarge);
PD3_DEFINE_ERROR(UnknownArtifact);
PD3_DEFINE_ERROR(UnknownCheck);
PD3_DEFINE_ERROR(FormatError);

#undef PD3_DEFINE_ERROR

// Parse failures carry the byte offset of the offending character.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pd3
