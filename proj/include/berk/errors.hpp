#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace berk {

/// Root of the library's exception hierarchy.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Precondition violations and operations outside their domain (CLI exit 2).
struct DomainError : Error {
    using Error::Error;
};

struct UndefinedProduct : DomainError {
    UndefinedProduct() : DomainError("undefined product of zero and infinity") {}
};

struct DivisionByZero : DomainError {
    DivisionByZero() : DomainError("division by zero magnitude") {}
};

struct InfiniteOperand : DomainError {
    InfiniteOperand() : DomainError("infinite magnitude is not a valid operand here") {}
};

struct OutOfUnitBall : DomainError {
    OutOfUnitBall() : DomainError("residue reduction requires norm <= 1") {}
};

struct MixedOpenness : DomainError {
    MixedOpenness() : DomainError("affinoid constituents must share one openness class") {}
};

struct NotACover : DomainError {
    NotACover() : DomainError("family does not cover the projective line") {}
};

struct OutOfRange : DomainError {
    using DomainError::DomainError;
};

struct SamePoint : DomainError {
    SamePoint() : DomainError("direction is undefined at the branch point itself") {}
};

struct UnsupportedPointType : DomainError {
    using DomainError::DomainError;
};

struct NotNested : DomainError {
    NotNested() : DomainError("affinoid list is not strictly nested") {}
};

struct TooManyPoints : DomainError {
    TooManyPoints() : DomainError("too many points for tree export") {}
};

/// Semi-decidable queries that hit their budget (CLI exit 3).
struct Undetermined : Error {
    using Error::Error;
};

struct PrecisionExhausted : Undetermined {
    PrecisionExhausted() : Undetermined("sign could not be certified within the precision cap") {}
};

struct Type4Undetermined : Undetermined {
    Type4Undetermined() : Undetermined("query on a singular point did not stabilize within the depth cap") {}
};

/// Parse failure with the offending position and what was expected (CLI exit 1).
struct SyntaxError : Error {
    std::size_t position;
    std::string expected;

    SyntaxError(std::size_t pos, std::string what_expected)
        : Error("syntax error at position " + std::to_string(pos) + ": expected " + what_expected),
          position(pos),
          expected(std::move(what_expected)) {}
};

}  // namespace berk
