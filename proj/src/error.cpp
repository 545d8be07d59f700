#include "sutured/error.hpp"

namespace sutured {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::MalformedExponent: return "MalformedExponent";
    case ErrorKind::UnbalancedParentheses: return "UnbalancedParentheses";
    case ErrorKind::InvalidGeneratorName: return "InvalidGeneratorName";
    case ErrorKind::DuplicateGenerator: return "DuplicateGenerator";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NontrivialTorsion: return "NontrivialTorsion";
    case ErrorKind::InvalidBasis: return "InvalidBasis";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotBalanced: return "NotBalanced";
    case ErrorKind::InternalInexactDivision: return "InternalInexactDivision";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::ZeroTorsion: return "ZeroTorsion";
    case ErrorKind::RankUnsupported: return "RankUnsupported";
    case ErrorKind::OddSutureCount: return "OddSutureCount";
    case ErrorKind::SutureCountTooSmall: return "SutureCountTooSmall";
    case ErrorKind::NonpositiveP: return "NonpositiveP";
    case ErrorKind::UnsupportedN: return "UnsupportedN";
    case ErrorKind::FileFormat: return "FileFormat";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(message), kind_(kind), position_(position) {}

}  // namespace sutured
