#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hgroup {

/// Dense element index into a lookup table.
using Index = std::size_t;

enum class Errc {
  ShapeMismatch,
  NotClosed,
  NoIdentity,
  NotAssociative,
  NoInverse,
  UnsupportedParameter,
  NotPrime,
  TooLarge,
  IndexOutOfRange,
  InvalidSubgroup,
  InvalidTransversal,
  SourceTargetMismatch,
  NotATripleMorphism,
  NotAHypergroupMorphism,
  SyntaxError,
  ValidationError,
  Io,
};

inline const char* to_string(Errc code) {
  switch (code) {
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotClosed: return "NotClosed";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NoInverse: return "NoInverse";
    case Errc::UnsupportedParameter: return "UnsupportedParameter";
    case Errc::NotPrime: return "NotPrime";
    case Errc::TooLarge: return "TooLarge";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::InvalidSubgroup: return "InvalidSubgroup";
    case Errc::InvalidTransversal: return "InvalidTransversal";
    case Errc::SourceTargetMismatch: return "SourceTargetMismatch";
    case Errc::NotATripleMorphism: return "NotATripleMorphism";
    case Errc::NotAHypergroupMorphism: return "NotAHypergroupMorphism";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

/// Base exception for every recoverable failure in the library. The witness
/// holds the offending indices when there are any (e.g. (i, j, k) for a
/// non-associative triple).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::vector<Index> witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        witness_(std::move(witness)) {}

  Errc code() const noexcept { return code_; }
  const std::vector<Index>& witness() const noexcept { return witness_; }

 private:
  Errc code_;
  std::vector<Index> witness_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& what)
      : Error(Errc::SyntaxError, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::string join(const std::vector<Index>& xs, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace detail

/// Outcome of a yes/no structural check. `witness` names the first
/// counterexample; `what` says which condition it violates.
struct Verdict {
  bool ok = true;
  std::string what;
  std::vector<Index> witness;

  explicit operator bool() const noexcept { return ok; }

  static Verdict pass() { return {}; }
  static Verdict fail(std::string what, std::vector<Index> witness = {}) {
    return {false, std::move(what), std::move(witness)};
  }

  std::string describe() const {
    if (ok) return "ok";
    if (witness.empty()) return what;
    return what + " at (" + detail::join(witness, ",") + ")";
  }
};

}  // namespace hgroup
