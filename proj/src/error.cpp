#include "ptower/error.hpp"

namespace ptower {

std::string_view error_name(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::NotNegative: return "NotNegative";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::BadDiscriminant: return "BadDiscriminant";
    case ErrorKind::DiscriminantMismatch: return "DiscriminantMismatch";
    case ErrorKind::InternalError: return "InternalError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::GroupAxiomError: return "GroupAxiomError";
    case ErrorKind::LevelTooLow: return "LevelTooLow";
    case ErrorKind::RankUnsupported: return "RankUnsupported";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::EvenPrime: return "EvenPrime";
    case ErrorKind::PrimeTooSmall: return "PrimeTooSmall";
    case ErrorKind::ConjectureNotAssumed: return "ConjectureNotAssumed";
    case ErrorKind::InconsistentDimension: return "InconsistentDimension";
    case ErrorKind::ConsistencyError: return "ConsistencyError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, std::string const & message)
    : std::runtime_error(message), kind_(kind)
{
}

void fail(ErrorKind kind, std::string const & message)
{
    throw Error(kind, message);
}

} // namespace ptower
