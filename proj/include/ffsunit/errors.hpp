#pragma once

#include <stdexcept>
#include <string>

namespace ffsunit {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mathematical precondition violated (division by zero, gcd of two zero
// polynomials, valuation of zero, ...).
struct DomainError : Error {
    using Error::Error;
};

// Expression syntax error.  `offset` is the 0-based byte position in the
// input string where parsing failed.
struct ParseError : Error {
    std::size_t offset;
    std::string expression;

    ParseError(const std::string& what, std::size_t offset_, std::string expression_)
        : Error(what), offset(offset_), expression(std::move(expression_)) {}
};

// A structural problem with a problem description (missing key, wrong type,
// mismatched array lengths, unknown mode, ...).
struct SpecError : Error {
    using Error::Error;
};

// A required hypothesis on the input system does not hold.  `hypothesis` is a
// stable machine-readable name ("nondegeneracy", "roots_nonconstant",
// "mult_independence", "order", "roots_distinct", ...).
struct HypothesisError : Error {
    std::string hypothesis;

    HypothesisError(std::string hypothesis_, const std::string& what)
        : Error(what), hypothesis(std::move(hypothesis_)) {}
};

// An internal consistency check failed.  This is a bug, never a user error:
// independently computed certificates disagreed.
struct InternalError : Error {
    using Error::Error;
};

inline void internal_check(bool ok, const char* what) {
    if (!ok) throw InternalError(std::string("internal consistency check failed: ") + what);
}

} // namespace ffsunit
