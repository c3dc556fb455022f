#ifndef WALLCROSS_ERRORS_HPP
#define WALLCROSS_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace wallcross
{

enum class ErrorKind {
    // Malformed or inconsistent input (CLI exit code 2).
    InvalidInput,
    DimensionMismatch,
    BadParamCount,
    EmptyLadder,
    NonDescending,
    // Mathematical precondition violated (CLI exit code 3).
    ZeroRank,
    NonPositiveRank,
    ZeroDegree,
    NonPositiveDegree,
    NonPositiveChi,
    DegreeMismatch,
    BadRank,
    UnsupportedC1,
    InadmissibleEndpoint,
    IrrationalCrossing,
    UnsupportedDimension,
};

inline constexpr std::string_view to_string(ErrorKind k) noexcept
{
    switch (k) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::BadParamCount: return "BadParamCount";
        case ErrorKind::EmptyLadder: return "EmptyLadder";
        case ErrorKind::NonDescending: return "NonDescending";
        case ErrorKind::ZeroRank: return "ZeroRank";
        case ErrorKind::NonPositiveRank: return "NonPositiveRank";
        case ErrorKind::ZeroDegree: return "ZeroDegree";
        case ErrorKind::NonPositiveDegree: return "NonPositiveDegree";
        case ErrorKind::NonPositiveChi: return "NonPositiveChi";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::BadRank: return "BadRank";
        case ErrorKind::UnsupportedC1: return "UnsupportedC1";
        case ErrorKind::InadmissibleEndpoint: return "InadmissibleEndpoint";
        case ErrorKind::IrrationalCrossing: return "IrrationalCrossing";
        case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    }
    return "Unknown";
}

inline constexpr bool is_validation(ErrorKind k) noexcept
{
    switch (k) {
        case ErrorKind::InvalidInput:
        case ErrorKind::DimensionMismatch:
        case ErrorKind::BadParamCount:
        case ErrorKind::EmptyLadder:
        case ErrorKind::NonDescending:
            return true;
        default:
            return false;
    }
}

/// Every failure raised by the library carries a machine-readable kind.
class error : public std::runtime_error
{
public:
    error(ErrorKind kind, const std::string &what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), m_kind(kind)
    {
    }

    [[nodiscard]] ErrorKind kind() const noexcept
    {
        return m_kind;
    }

private:
    ErrorKind m_kind;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string &what)
{
    throw error(kind, what);
}

} // namespace wallcross

#endif
