// errors.hpp -- typed failure conditions shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace plateau {

enum class Errc {
    NotPrime,
    Reducible,
    NotPrimitive,
    DivisionByZero,
    FieldMismatch,
    OrderMismatch,
    InvalidAutomorphism,
    NotRational,
    NotPlateaued,
    NoCanonicalForm,
    NonRationalSum,
    LengthMismatch,
    ParityViolation,
    RangeViolation,
    BudgetExceeded,
    InvalidSpec,
    ParseError,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace plateau
