#include "brauer/errors.hpp"

namespace brauer {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::BadRotation: return "BadRotation";
    case ErrorCode::BadStem: return "BadStem";
    case ErrorCode::BadMultiplicity: return "BadMultiplicity";
    case ErrorCode::NotReflectionSymmetric: return "NotReflectionSymmetric";
    case ErrorCode::EdgeOnStem: return "EdgeOnStem";
    case ErrorCode::ProjectiveInput: return "ProjectiveInput";
    case ErrorCode::CaseMismatch: return "CaseMismatch";
    case ErrorCode::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::InternalCountMismatch: return "InternalCountMismatch";
    case ErrorCode::NeedsDistance: return "NeedsDistance";
    case ErrorCode::NotSelfDualPosition: return "NotSelfDualPosition";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
    case ErrorCode::MissingAnchor: return "MissingAnchor";
    case ErrorCode::InconsistentAnchors: return "InconsistentAnchors";
    case ErrorCode::BadEpsilon: return "BadEpsilon";
    case ErrorCode::SizeSumMismatch: return "SizeSumMismatch";
    case ErrorCode::BadSquareMap: return "BadSquareMap";
    case ErrorCode::NoIdentityClass: return "NoIdentityClass";
    case ErrorCode::NotLinear: return "NotLinear";
    case ErrorCode::DualityMismatch: return "DualityMismatch";
    case ErrorCode::NumericallyUnstable: return "NumericallyUnstable";
  }
  return "UnknownError";
}

}  // namespace brauer
