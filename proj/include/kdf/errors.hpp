#ifndef KDF_ERRORS_HPP
#define KDF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kdf {

// A denominator Pochhammer (or an explicit divisor) evaluated to zero.
struct PoleInParameters : std::domain_error {
    using std::domain_error::domain_error;
};

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

// Operands with differing variable count, cap or list lengths.
struct ShapeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// The identity needs parameter structure the spec does not have.
struct NotApplicable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ExhaustedRetries : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace kdf

#endif
