#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polytwo {

enum class ErrorCode {
  MalformedInput,
  NotComparable,
  BadLetter,
  NoPath,
  BadRank,
  NotInParent,
  GroupCapExceeded,
  TooManyOrbits,
  NotTwoOrbit,
  NotAChain,
  MissingAutomorphism,
  FormulaMismatch,
  PreconditionViolated,
  CaseUndefined,
  ReconstructionMismatch,
  BadParameter,
  DegenerateQuotient,
  SyntaxError,
  UnknownFaceId,
  RankMismatch,
  UnknownSource,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::BadLetter: return "BadLetter";
    case ErrorCode::NoPath: return "NoPath";
    case ErrorCode::BadRank: return "BadRank";
    case ErrorCode::NotInParent: return "NotInParent";
    case ErrorCode::GroupCapExceeded: return "GroupCapExceeded";
    case ErrorCode::TooManyOrbits: return "TooManyOrbits";
    case ErrorCode::NotTwoOrbit: return "NotTwoOrbit";
    case ErrorCode::NotAChain: return "NotAChain";
    case ErrorCode::MissingAutomorphism: return "MissingAutomorphism";
    case ErrorCode::FormulaMismatch: return "FormulaMismatch";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::CaseUndefined: return "CaseUndefined";
    case ErrorCode::ReconstructionMismatch: return "ReconstructionMismatch";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::DegenerateQuotient: return "DegenerateQuotient";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownFaceId: return "UnknownFaceId";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::UnknownSource: return "UnknownSource";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
/// Parse errors additionally carry the 1-based input line.
class PolytopeError : public std::runtime_error {
 public:
  PolytopeError(ErrorCode code, const std::string& message, std::size_t line = 0)
      : std::runtime_error(compose(code, message, line)), code_(code), line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string compose(ErrorCode code, const std::string& message, std::size_t line) {
    std::string out(to_string(code));
    if (line != 0) out += " (line " + std::to_string(line) + ")";
    out += ": ";
    out += message;
    return out;
  }

  ErrorCode code_;
  std::size_t line_;
};

}  // namespace polytwo
