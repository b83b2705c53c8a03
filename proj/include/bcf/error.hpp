#ifndef BCF_ERROR_HPP
#define BCF_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace bcf
{

enum class ErrorKind {
    NotGCM,
    NotSymmetrizable,
    DegenerateRealization,
    BadShape,
    IndexOutOfRange,
    NotReduced,
    FrozenIndex,
    NonIntegerBtilde,
    NotInG0,
    NotInCell,
    PreconditionViolated,
    NonIntegerExponent,
    Singular,
    DivisionByZero,
    ParseError,
};

inline std::string_view kind_name(ErrorKind k) noexcept
{
    switch (k) {
        case ErrorKind::NotGCM:
            return "NotGCM";
        case ErrorKind::NotSymmetrizable:
            return "NotSymmetrizable";
        case ErrorKind::DegenerateRealization:
            return "DegenerateRealization";
        case ErrorKind::BadShape:
            return "BadShape";
        case ErrorKind::IndexOutOfRange:
            return "IndexOutOfRange";
        case ErrorKind::NotReduced:
            return "NotReduced";
        case ErrorKind::FrozenIndex:
            return "FrozenIndex";
        case ErrorKind::NonIntegerBtilde:
            return "NonIntegerBtilde";
        case ErrorKind::NotInG0:
            return "NotInG0";
        case ErrorKind::NotInCell:
            return "NotInCell";
        case ErrorKind::PreconditionViolated:
            return "PreconditionViolated";
        case ErrorKind::NonIntegerExponent:
            return "NonIntegerExponent";
        case ErrorKind::Singular:
            return "Singular";
        case ErrorKind::DivisionByZero:
            return "DivisionByZero";
        case ErrorKind::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), m_kind(kind)
    {
    }

    ErrorKind kind() const noexcept
    {
        return m_kind;
    }

private:
    ErrorKind m_kind;
};

} // namespace bcf

#endif
