#ifndef QBRACKET_ERRORS_HPP
#define QBRACKET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qbracket {

// Argument outside an operation's mathematical domain (y below the floor,
// t = 0, invalid partition, non-fundamental discriminant, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Evaluation at a pole (zeta(1), P_{-2k}(0), ...).
struct PoleError : DomainError {
    using DomainError::DomainError;
};

// A configured cap was exceeded (partition size, Bernoulli index, |D|).
struct ResourceLimitError : std::length_error {
    using std::length_error::length_error;
};

// Division by, or log of, a series whose constant term is not a unit.
struct UnitError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Adding series with different q-offsets or truncation orders.
struct AlignmentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A requested tolerance cannot be met with the available terms.
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quadrature or series that converges too slowly to be trusted.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qbracket

#endif
