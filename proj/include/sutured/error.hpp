#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sutured {

enum class ErrorKind {
  ParseError,
  UnknownGenerator,
  MalformedExponent,
  UnbalancedParentheses,
  InvalidGeneratorName,
  DuplicateGenerator,
  SizeLimit,
  NontrivialTorsion,
  InvalidBasis,
  InexactDivision,
  RankMismatch,
  NotBalanced,
  InternalInexactDivision,
  NotSquare,
  ZeroTorsion,
  RankUnsupported,
  OddSutureCount,
  SutureCountTooSmall,
  NonpositiveP,
  UnsupportedN,
  FileFormat,
  IoError,
};

std::string_view to_string(ErrorKind kind);

// Every failure surfaced by the library. `position` is a character offset
// for parse errors and a 1-based line number for file format errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> position_;
};

}  // namespace sutured
