#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace syndiv {

enum class ErrorKind {
  // derivation parsing
  UnbalancedParens,
  EmptyInput,
  EmptyLabel,
  MalformedDerivation,
  // corpus / config loading
  Io,
  MalformedRecord,
  DuplicateId,
  InvalidPattern,
  // distributions
  FilterOnConstructions,
  EmptyDistribution,
  CategoryMismatch,
  EmptyCorpus,
  // diversity / comparison
  BadTargetN,
  BadIterations,
  BadTopK,
  UnknownLabel,
  // generation
  BadTask,
  EmptyAfterCleaning,
  Transport,
  AuthFailure,
  RateLimited,
  MalformedResponse,
  // CLI
  UsageError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse error with the byte offset into the input where it was detected.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t offset, const std::string& message)
      : Error(kind, message + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Record-level load error carrying the 1-based line number.
class RecordError : public Error {
 public:
  RecordError(ErrorKind kind, std::size_t line, const std::string& message)
      : Error(kind, "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace syndiv
