#pragma once

#include <stdexcept>
#include <string>

namespace pgl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- presentation file errors ---
struct SyntaxError : Error {
  int line, col;
  SyntaxError(const std::string& msg, int line_, int col_)
      : Error("syntax error at " + std::to_string(line_) + ":" +
              std::to_string(col_) + ": " + msg),
        line(line_), col(col_) {}
};

struct IndexError : Error {
  using Error::Error;
};

struct NonPrimeError : Error {
  using Error::Error;
};

// --- realization / engine errors ---
struct InconsistentPresentation : Error {
  using Error::Error;
};

struct NotNormalError : Error {
  using Error::Error;
};

struct NotAbelianError : Error {
  using Error::Error;
};

struct NotApplicableError : Error {
  using Error::Error;
};

struct ScopeExceededError : Error {
  using Error::Error;
};

struct NotPurelyNonabelianError : Error {
  using Error::Error;
};

struct NotRegularError : Error {
  using Error::Error;
};

struct UnknownTheoremIdError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

// Violation of an internal self-check (a bug, not bad input).
struct InternalError : Error {
  using Error::Error;
};

}  // namespace pgl
