#pragma once

#include <stdexcept>
#include <string>

namespace neumaier {

enum class ErrorCode {
  InvalidArgument = 1,
  Parse = 2,
  Io = 3,
  LimitExceeded = 4,
  Internal = 5,
};

// Base exception for the library. The C API maps `code()` onto nm_status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(ErrorCode::InvalidArgument, what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(ErrorCode::Parse, what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::Io, what) {}
};

class LimitExceeded : public Error {
 public:
  explicit LimitExceeded(const std::string& what) : Error(ErrorCode::LimitExceeded, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(ErrorCode::Internal, what) {}
};

}  // namespace neumaier
