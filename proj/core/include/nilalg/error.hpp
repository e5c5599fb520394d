#ifndef NILALG_ERROR_HPP
#define NILALG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nilalg {

enum class Errc {
  MixedFields,
  DivisionByZero,
  ZeroInput,
  InvalidField,
  AmbientMismatch,
  NotASubspace,
  DimensionMismatch,
  SingularMap,
  NotACocycle,
  NotAutomorphism,
  SearchSpaceTooLarge,
  UnknownEntry,
  MissingParam,
  SingularBasis,
  ParseError,
};

const char* errc_name(Errc c);

/// Exception carrying a machine-checkable error code next to the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace nilalg

#endif
