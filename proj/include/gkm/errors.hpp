#pragma once

#include <stdexcept>
#include <string>

namespace gkm {

enum class ErrorKind {
  kInvalidGraph,
  kInvalidXRay,
  kMismatch,
  kUnknownExample,
  kTorsionInQuotient,
  kNotInLattice,
  kChernRequiresSignedGraph,
  kRequiresSignedGraph,
  kNonIntegralLocalizationSum,
  kNot6Dimensional,
  kGeneratorsDoNotSpan,
  kFormat,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidGraph: return "invalid-graph";
    case ErrorKind::kInvalidXRay: return "invalid-xray";
    case ErrorKind::kMismatch: return "mismatch";
    case ErrorKind::kUnknownExample: return "unknown-example";
    case ErrorKind::kTorsionInQuotient: return "torsion-in-quotient";
    case ErrorKind::kNotInLattice: return "not-in-lattice";
    case ErrorKind::kChernRequiresSignedGraph: return "chern-requires-signed-graph";
    case ErrorKind::kRequiresSignedGraph: return "requires-signed-graph";
    case ErrorKind::kNonIntegralLocalizationSum: return "non-integral-localization-sum";
    case ErrorKind::kNot6Dimensional: return "not-6-dimensional";
    case ErrorKind::kGeneratorsDoNotSpan: return "generators-do-not-span";
    case ErrorKind::kFormat: return "format";
  }
  return "error";
}

/// Computation errors. The message names the violated hypothesis.
class GkmError : public std::runtime_error {
 public:
  GkmError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gkm
