#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fermat {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands belong to different cyclotomic fields.
struct FieldMismatchError : Error {
    using Error::Error;
};

// Operands belong to different quotient rings.
struct RingMismatchError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

// Requested element does not exist in the configured field (e.g. `i` when 4 does not divide the conductor).
struct UnsupportedElementError : Error {
    using Error::Error;
};

// Matrix or element dimensions do not fit the operation.
struct ShapeError : Error {
    using Error::Error;
};

// Wrong number of generator images.
struct ArityError : Error {
    using Error::Error;
};

// Generator index out of range (or i >= j where an ordered pair is required).
struct IndexError : Error {
    using Error::Error;
};

// A derivation whose well-definedness certificate failed was asked to act.
struct CertificationError : Error {
    using Error::Error;
};

// The candidate images do not define a derivation of the quotient ring.
// Carries the printed nonzero residue of sum_i m_i x_i^(m_i-1) d(x_i).
struct NotADerivationError : Error {
    NotADerivationError(const std::string& message, std::string residue_text)
        : Error(message), residue(std::move(residue_text)) {}
    std::string residue;
};

struct PreconditionError : Error {
    using Error::Error;
};

// Expression / matrix / ring-spec text could not be parsed.
// `offset` is the byte position of the failure in the input.
struct ParseError : Error {
    enum class Kind { syntax, arity, literal };

    ParseError(Kind k, std::size_t at, const std::string& message)
        : Error(message + " (at offset " + std::to_string(at) + ")"), kind(k), offset(at) {}

    Kind kind;
    std::size_t offset;
};

struct UsageError : Error {
    using Error::Error;
};

}  // namespace fermat
