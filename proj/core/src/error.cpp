#include "hyperpack/error.hpp"

namespace hyperpack {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotHyperbolic: return "NotHyperbolic";
    case ErrorKind::NotDoublyTruncated: return "NotDoublyTruncated";
    case ErrorKind::AmbiguousClassification: return "AmbiguousClassification";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::SymmetryUnavailable: return "SymmetryUnavailable";
    case ErrorKind::FeasibilityError: return "FeasibilityError";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::NotUnimodal: return "NotUnimodal";
    case ErrorKind::EmptyScan: return "EmptyScan";
    case ErrorKind::ToleranceNotMet: return "ToleranceNotMet";
  }
  return "Unknown";
}

bool is_classification_error(ErrorKind kind) noexcept {
  return kind == ErrorKind::NotHyperbolic ||
         kind == ErrorKind::NotDoublyTruncated ||
         kind == ErrorKind::AmbiguousClassification;
}

}  // namespace hyperpack
