#pragma once

#include <stdexcept>
#include <string>

namespace qkoszul {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexError : Error {
    using Error::Error;
};

// Inversion requested for a scalar that is not a single signed q-monomial.
struct NotAUnitError : Error {
    using Error::Error;
};

struct MissingParameterError : Error {
    using Error::Error;
};

struct ZeroParameterValueError : Error {
    using Error::Error;
};

// Rewriting step budget exhausted; the presentation is not a valid input.
struct NonTerminatingError : Error {
    using Error::Error;
};

// A monomial was expected to be reduced (exponents below the nilpotency bound).
struct NotReducedError : Error {
    using Error::Error;
};

// An element was expected to lie in the augmentation ideal.
struct NotAugmentedError : Error {
    using Error::Error;
};

struct MixedDegreeError : Error {
    using Error::Error;
};

struct ZeroElementError : Error {
    using Error::Error;
};

struct DegreeMismatchError : Error {
    using Error::Error;
};

struct UnsupportedDegreeError : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    explicit ParseError(const std::string& msg, int line_no = 0)
        : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
};

}  // namespace qkoszul
