#pragma once

#include <stdexcept>
#include <string>

namespace milnor {

// Machine-readable failure codes.  The first group are input/usage errors
// (CLI exit code 1); the second group are internal invariant violations
// that indicate a bug or an inconsistent computation (CLI exit code 2).
enum class Errc {
  syntax_error,
  zero_form,
  duplicate_hyperplane,
  dimension_mismatch,
  unsupported_builtin,
  invalid_dimension,
  genericity_failure,
  section_failure,
  not_triple_point_arrangement,
  io_error,

  internal_inconsistency,
  inconsistent_spectrum,
  negative_sigma,
  bound_violated,
};

const char* errc_name(Errc c);
bool errc_is_internal(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code),
        message_(msg) {}
  Errc code() const { return code_; }
  // The message without the code prefix, for callers that report the code
  // in a separate field.
  const std::string& message() const { return message_; }

 private:
  Errc code_;
  std::string message_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace milnor
