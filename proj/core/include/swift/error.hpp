#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace swift {

enum class ErrorCode {
  kParse,            // malformed catalog document
  kValidation,       // well-formed but inconsistent catalog or sign
  kUnknownCategory,
  kUnknownFacet,
  kFacetDomain,      // facet value outside the declared domain
  kNotFound,
  kUnknownGlyph,
  kOutOfCanvas,
  kInvalidSelection,
  kSyntax,           // SWT1 grammar violation
  kOutOfRange,       // SWT1 field outside its allowed range
  kStorage,
  kCorruptRecord,
  kBadRequest,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace swift
