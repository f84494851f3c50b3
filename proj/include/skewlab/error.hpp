#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewlab {

/// Every failure raised by the library carries one of these codes so that
/// callers (notably the CLI) can tell bad input apart from a broken invariant.
enum class ErrorCode {
    DivisionByZero,
    LevelMismatch,
    NotASubfield,
    BothZero,
    ZeroInput,
    RingMismatch,
    ZeroDivisor,
    NoDivisorFound,
    ScaleTooLarge,
    NoInvertibleSolution,
    NoUnitSolution,
    TooLarge,
    NotInvertible,
    NoInvertibleCodeword,
    InvalidEta,
    InvalidGamma,
    EvenQ,
    OddN,
    MismatchFound,
    OutOfTheoremRange,
    InvalidArgument,
    ParseError,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace skewlab
