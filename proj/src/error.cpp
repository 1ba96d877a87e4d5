#include "mnhd/error.hpp"

namespace mnhd {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::InvalidDesign: return "InvalidDesign";
    case ErrorCode::NotUniform: return "NotUniform";
    case ErrorCode::NotBalanced: return "NotBalanced";
    case ErrorCode::ReplicationVaries: return "ReplicationVaries";
    case ErrorCode::DegenerateDesign: return "DegenerateDesign";
    case ErrorCode::DegenerateDLambda: return "DegenerateDLambda";
    case ErrorCode::NonSymmetric: return "NonSymmetric";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::AmbiguousGap: return "AmbiguousGap";
    case ErrorCode::RepeatedEigenvalue: return "RepeatedEigenvalue";
    case ErrorCode::MixedRadicands: return "MixedRadicands";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NoCaseMatches: return "NoCaseMatches";
    case ErrorCode::NegativeTime: return "NegativeTime";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::UnknownSignature: return "UnknownSignature";
    case ErrorCode::NotFourEigenvalues: return "NotFourEigenvalues";
    case ErrorCode::InvalidRadicand: return "InvalidRadicand";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace mnhd
