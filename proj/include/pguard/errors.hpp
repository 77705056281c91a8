#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pguard {

// Base class for all library failures.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A logical form (or other structured text) could not be parsed.
// `raw` carries the offending provider/source text.
struct ParseError : Error {
  std::string raw;
  explicit ParseError(const std::string& msg, std::string raw_text = {})
      : Error(msg), raw(std::move(raw_text)) {}
};

// Requested component (e.g. second entity of a unary form) does not exist.
struct MissingComponent : Error {
  using Error::Error;
};

// Transport/auth/rate-limit failure from a chat or embedding backend,
// raised after the retry budget is exhausted.
struct ProviderError : Error {
  using Error::Error;
};

// Provider answered, but not with a recognizable Yes/No.
struct UnparseableVerdict : Error {
  std::string raw;
  explicit UnparseableVerdict(const std::string& msg, std::string raw_text = {})
      : Error(msg), raw(std::move(raw_text)) {}
};

// Malformed input record; `line` is 1-based.
struct FormatError : Error {
  std::size_t line;
  FormatError(const std::string& msg, std::size_t line_no)
      : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

struct EmptyGraph : Error {
  using Error::Error;
};

struct NoCandidates : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct ZeroVector : Error {
  using Error::Error;
};

struct EmptyDataset : Error {
  using Error::Error;
};

struct LengthMismatch : Error {
  using Error::Error;
};

struct TooFewPairs : Error {
  using Error::Error;
};

struct IdMismatch : Error {
  using Error::Error;
};

struct AllVotesUnparseable : Error {
  using Error::Error;
};

// Bad run configuration (missing files, out-of-range parameters, ...).
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace pguard
