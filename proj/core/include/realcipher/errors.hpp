#pragma once

#include <stdexcept>
#include <string>

namespace realcipher {

/// Base of every error raised by the library. Callers may prepend context
/// (stage, token or character index) while the exception propagates; the
/// dynamic type is preserved because the same object is rethrown.
class Error : public std::exception {
 public:
  explicit Error(std::string message) : message_(std::move(message)) {}

  const char* what() const noexcept override { return message_.c_str(); }

  void add_context(const std::string& context) {
    message_ = context + ": " + message_;
  }

 private:
  std::string message_;
};

#define REALCIPHER_DEFINE_ERROR(Name)  \
  class Name : public Error {          \
   public:                             \
    using Error::Error;                \
  }

REALCIPHER_DEFINE_ERROR(PreconditionError);
REALCIPHER_DEFINE_ERROR(FormatOverflow);
REALCIPHER_DEFINE_ERROR(ParseError);
REALCIPHER_DEFINE_ERROR(RoundingDriftError);
REALCIPHER_DEFINE_ERROR(CodeRangeError);
REALCIPHER_DEFINE_ERROR(SingularMatrixError);
REALCIPHER_DEFINE_ERROR(KeygenError);
REALCIPHER_DEFINE_ERROR(NoRootError);
REALCIPHER_DEFINE_ERROR(ConvergenceError);
REALCIPHER_DEFINE_ERROR(InsufficientDataError);
REALCIPHER_DEFINE_ERROR(InconsistentDataError);

#undef REALCIPHER_DEFINE_ERROR

/// Key file problems are parse errors that carry a line number in the message.
class KeyFileError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace realcipher
