#pragma once

#include <stdexcept>
#include <string>

namespace hn {

// Error taxonomy shared by the engine, the instances and the CLI.
// Every failure that can reach a caller is one of these; plain
// std::logic_error style asserts are reserved for internal bugs.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An HN-related operation was asked about the zero object (rank 0).
struct ZeroObject : Error {
    using Error::Error;
};

// A mathematical guarantee of the axioms failed at runtime, which means
// the category instance under inspection is broken, not the engine.
struct AxiomViolation : Error {
    using Error::Error;
};

// An exhaustive search was requested beyond the configured size bounds.
struct EnumerationBound : Error {
    using Error::Error;
};

// A power-series computation could not be decided at the working
// precision, even after the automatic retry.
struct PrecisionExhausted : Error {
    using Error::Error;
};

// Malformed or inconsistent caller-supplied data.
struct InvalidInput : Error {
    using Error::Error;
};

// Determinant vanished where an isogeny was required.
struct SingularMatrix : InvalidInput {
    using InvalidInput::InvalidInput;
};

// Exact integer arithmetic left the representable range.  Raised instead
// of wrapping; all slope arithmetic is exact by contract.
struct ArithmeticOverflow : Error {
    using Error::Error;
};

} // namespace hn
