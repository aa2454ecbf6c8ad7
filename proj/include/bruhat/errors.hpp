#pragma once

#include <stdexcept>
#include <string>

namespace bruhat {

/// Base of every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PatternMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class MarginMismatch : public Error {
 public:
  using Error::Error;
};

class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotInClass : public Error {
 public:
  using Error::Error;
};

class InfeasibleMargins : public Error {
 public:
  using Error::Error;
};

class ClassTooLarge : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

class MalformedChain : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace bruhat
