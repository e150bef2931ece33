#pragma once

#include <stdexcept>
#include <string>

namespace skewpieri {

// Base for every recoverable failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& token, const std::string& why)
      : Error("cannot parse '" + token + "': " + why), token_(token) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

class NoInsideCorner : public Error {
 public:
  using Error::Error;
};

class NotOutsideCorner : public Error {
 public:
  using Error::Error;
};

class InvalidResult : public Error {
 public:
  using Error::Error;
};

class NoUpwardPath : public Error {
 public:
  using Error::Error;
};

class NotFixedPoint : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class InvalidDifference : public Error {
 public:
  using Error::Error;
};

}  // namespace skewpieri
