#pragma once

#include <stdexcept>
#include <string>

namespace orthocoord {

enum class ErrorKind {
    NotALattice,
    NotAPartialOrder,
    NoBounds,
    TooLarge,
    NotInvolution,
    NotOrderReversing,
    NotComplement,
    PreconditionFailed,
    InternalProofViolation,
    NotOrthosymmetric,
    Isotropic,
    NotInvertibleGram,
    NotClosed,
    NotStarRegular,
    NotRegular,
    InfiniteLattice,
    NotProjection,
    NotARing,
    NoSolution,
    CancellationFailure,
    WellDefinednessViolation,
    NotAFrame,
    NonPrimeField,
    ClosureFailure,
    FrameImageDegenerate,
    Unsupported,
    MalformedInput,
};

const char* to_string(ErrorKind kind);

/// Base exception for every failure raised by the library. The kind names
/// the violated contract; the message carries the witness.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace orthocoord
