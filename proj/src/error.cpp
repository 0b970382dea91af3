#include "tilinglab/error.hpp"

namespace tilinglab {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::NotSimplyConnected: return "NotSimplyConnected";
    case ErrorKind::BaseNotOnBoundary: return "BaseNotOnBoundary";
    case ErrorKind::EpsTooLarge: return "EpsTooLarge";
    case ErrorKind::PointNotOnBoundary: return "PointNotOnBoundary";
    case ErrorKind::InvalidPolygon: return "InvalidPolygon";
    case ErrorKind::InvalidRegion: return "InvalidRegion";
    case ErrorKind::UnbalancedColors: return "UnbalancedColors";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::InvalidPath: return "InvalidPath";
    case ErrorKind::CellMissing: return "CellMissing";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NonAdjacentPair: return "NonAdjacentPair";
    case ErrorKind::ColorMismatch: return "ColorMismatch";
    case ErrorKind::InconsistentTiling: return "InconsistentTiling";
    case ErrorKind::PoleAt: return "PoleAt";
    case ErrorKind::BranchCutHit: return "BranchCutHit";
    case ErrorKind::ZeroB: return "ZeroB";
    case ErrorKind::DegenerateParameters: return "DegenerateParameters";
    case ErrorKind::PathThroughSingularity: return "PathThroughSingularity";
    case ErrorKind::MeshTooCoarse: return "MeshTooCoarse";
    case ErrorKind::DeltaTooSmall: return "DeltaTooSmall";
    case ErrorKind::InsufficientDeltas: return "InsufficientDeltas";
    case ErrorKind::InsufficientSamples: return "InsufficientSamples";
    case ErrorKind::VertexMissing: return "VertexMissing";
    case ErrorKind::HoleColorMismatch: return "HoleColorMismatch";
    case ErrorKind::BNotOnBoundary: return "BNotOnBoundary";
    case ErrorKind::ConfigError: return "ConfigError";
    }
    return "Unknown";
}

}  // namespace tilinglab
