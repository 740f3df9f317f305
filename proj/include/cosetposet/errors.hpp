#pragma once

#include <stdexcept>
#include <string>

namespace cosetposet {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LengthMismatchError : Error {
  using Error::Error;
};

struct RankDeficientError : Error {
  using Error::Error;
};

struct NotStandardFormError : Error {
  using Error::Error;
};

struct NotProperSubspaceError : Error {
  using Error::Error;
};

struct TooLargeError : Error {
  using Error::Error;
};

struct TableMismatchError : Error {
  using Error::Error;
};

struct DisconnectedError : Error {
  using Error::Error;
};

struct SizeMismatchError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

struct BudgetExceededError : Error {
  using Error::Error;
};

// Carries the 1-based position of the offending input.
struct ParseError : Error {
  ParseError(const std::string& what, int line_no, int column_no)
      : Error(what), line(line_no), column(column_no) {}
  int line;
  int column;
};

}  // namespace cosetposet
