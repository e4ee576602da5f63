#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperpack {

enum class ErrorKind {
  NotHyperbolic,
  NotDoublyTruncated,
  AmbiguousClassification,
  DomainError,
  SymmetryUnavailable,
  FeasibilityError,
  InternalInconsistency,
  NotUnimodal,
  EmptyScan,
  ToleranceNotMet,
};

/// Stable machine-readable name, e.g. "NotHyperbolic".
std::string_view error_name(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind is what callers branch on;
/// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

/// True for the errors that mean "this (u,v,w) is not a doubly truncated
/// hyperbolic orthoscheme"; scans skip these triples.
bool is_classification_error(ErrorKind kind) noexcept;

}  // namespace hyperpack
