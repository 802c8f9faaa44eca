#pragma once

#include <stdexcept>
#include <string>

namespace bottres {

enum class Errc {
  ZeroWeight,
  ArityMismatch,
  BadDimension,
  DuplicateExponent,
  WrongStructure,
  IndexOutOfRange,
  PartTooLarge,
  DegreeTooHigh,
  NotSemifree,
  EmptyProfile,
  NonDivisibleDimension,
  DivisionByZeroFunction,
  ParseError,
  BadParams,
};

/// Library-wide error type; the CLI maps every code to exit status 2.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ZeroWeight: return "ZeroWeight";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::BadDimension: return "BadDimension";
    case Errc::DuplicateExponent: return "DuplicateExponent";
    case Errc::WrongStructure: return "WrongStructure";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::PartTooLarge: return "PartTooLarge";
    case Errc::DegreeTooHigh: return "DegreeTooHigh";
    case Errc::NotSemifree: return "NotSemifree";
    case Errc::EmptyProfile: return "EmptyProfile";
    case Errc::NonDivisibleDimension: return "NonDivisibleDimension";
    case Errc::DivisionByZeroFunction: return "DivisionByZeroFunction";
    case Errc::ParseError: return "ParseError";
    case Errc::BadParams: return "BadParams";
  }
  return "Unknown";
}

}  // namespace bottres
