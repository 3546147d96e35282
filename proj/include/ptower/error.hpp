#ifndef PTOWER_ERROR_HPP
#define PTOWER_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ptower {

/*
 * Every failure surfaced by the library carries one of these kinds.  The
 * CLI reports the kind name verbatim, so the names are part of the
 * external interface.
 */
enum class ErrorKind {
    NotSquarefree,
    NotNegative,
    NotPrime,
    NotPositiveDefinite,
    BadDiscriminant,
    DiscriminantMismatch,
    InternalError,
    SchemaError,
    GroupAxiomError,
    LevelTooLow,
    RankUnsupported,
    EmptyInput,
    SyntaxError,
    EvenPrime,
    PrimeTooSmall,
    ConjectureNotAssumed,
    InconsistentDimension,
    ConsistencyError,
    InvalidArgument,
};

std::string_view error_name(ErrorKind kind);

class Error : public std::runtime_error
{
    ErrorKind kind_;

    public:

    Error(ErrorKind kind, std::string const & message);

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }
};

[[noreturn]] void fail(ErrorKind kind, std::string const & message);

} // namespace ptower

#endif /* PTOWER_ERROR_HPP */
