#pragma once

#include <stdexcept>
#include <string>

namespace skewalg {

enum class ErrorCode {
    CharacteristicMismatch,
    ShapeError,
    NotFiniteDimensional,
    PresentationError,
    InvalidAlgebra,
    NotIdempotent,
    InvalidPermutation,
    GroupTooLarge,
    InvalidPrime,
    ENotClosed,
    ActionError,
    AlgebraMismatch,
    FreeActionRequired,
    ConnectedRequired,
    TrivialGroup,
    UnsupportedOverQ,
    NotAPosetAction,
    InvalidPoset,
    GradingInconsistent,
    NotDegreeOneGenerated,
    NotGradePreserving,
    PreconditionFailed,
    InputError,
    ResourceCap,
    Internal,
};

inline const char* error_code_name(ErrorCode c)
{
    switch (c) {
        case ErrorCode::CharacteristicMismatch: return "CharacteristicMismatch";
        case ErrorCode::ShapeError: return "ShapeError";
        case ErrorCode::NotFiniteDimensional: return "NotFiniteDimensional";
        case ErrorCode::PresentationError: return "PresentationError";
        case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
        case ErrorCode::NotIdempotent: return "NotIdempotent";
        case ErrorCode::InvalidPermutation: return "InvalidPermutation";
        case ErrorCode::GroupTooLarge: return "GroupTooLarge";
        case ErrorCode::InvalidPrime: return "InvalidPrime";
        case ErrorCode::ENotClosed: return "ENotClosed";
        case ErrorCode::ActionError: return "ActionError";
        case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
        case ErrorCode::FreeActionRequired: return "FreeActionRequired";
        case ErrorCode::ConnectedRequired: return "ConnectedRequired";
        case ErrorCode::TrivialGroup: return "TrivialGroup";
        case ErrorCode::UnsupportedOverQ: return "UnsupportedOverQ";
        case ErrorCode::NotAPosetAction: return "NotAPosetAction";
        case ErrorCode::InvalidPoset: return "InvalidPoset";
        case ErrorCode::GradingInconsistent: return "GradingInconsistent";
        case ErrorCode::NotDegreeOneGenerated: return "NotDegreeOneGenerated";
        case ErrorCode::NotGradePreserving: return "NotGradePreserving";
        case ErrorCode::PreconditionFailed: return "PreconditionFailed";
        case ErrorCode::InputError: return "InputError";
        case ErrorCode::ResourceCap: return "ResourceCap";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code)
    {
    }

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg)
{
    throw Error(code, msg);
}

} // namespace skewalg
