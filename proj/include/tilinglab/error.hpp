#pragma once

#include <stdexcept>
#include <string>

namespace tilinglab {

enum class ErrorKind {
    NotSimplyConnected,
    BaseNotOnBoundary,
    EpsTooLarge,
    PointNotOnBoundary,
    InvalidPolygon,
    InvalidRegion,
    UnbalancedColors,
    SingularMatrix,
    InvalidPath,
    CellMissing,
    CapExceeded,
    Disconnected,
    DomainError,
    NonAdjacentPair,
    ColorMismatch,
    InconsistentTiling,
    PoleAt,
    BranchCutHit,
    ZeroB,
    DegenerateParameters,
    PathThroughSingularity,
    MeshTooCoarse,
    DeltaTooSmall,
    InsufficientDeltas,
    InsufficientSamples,
    VertexMissing,
    HoleColorMismatch,
    BNotOnBoundary,
    ConfigError,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace tilinglab
