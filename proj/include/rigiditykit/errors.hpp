#pragma once

#include <stdexcept>

namespace rigiditykit {

// Common base so callers can catch everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input (unparseable rationals, malformed flags, empty scans).
struct ParseError : Error {
    using Error::Error;
};

// Structurally invalid arguments (r outside 0 < r < n, bad family shape).
struct InvalidRange : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

// Spectrum unusable: repeated eigenvalues, below minimum size, non-finite
// float entries, or pairwise gaps under the distinctness tolerance.
struct DegenerateSpectrum : Error {
    using Error::Error;
};

struct SingularSystem : Error {
    using Error::Error;
};

// The linear system for multiplicities has no positive-integer solution,
// i.e. the supplied power sums are inconsistent with any profile.
struct NonIntegralSolution : Error {
    using Error::Error;
};

// theta too close to an endpoint of (0, pi/g), where cot blows up.
struct PoleProximity : Error {
    using Error::Error;
};

struct ConvergenceFailure : Error {
    using Error::Error;
};

// A proven algebraic identity failed bit-for-bit in exact arithmetic.
// Always an implementation bug, never a property of the input.
struct IdentityViolation : Error {
    using Error::Error;
};

// A float-evaluated bound in the certification chain failed; signals
// either float under/overflow or an implementation bug.
struct BoundViolation : Error {
    using Error::Error;
};

// The quantity certified to be nonpositive came out positive.
struct PositivityViolation : Error {
    using Error::Error;
};

// A certified strict inequality came out the wrong way on a concrete
// input. Distinct from IdentityViolation: this is the failure mode the
// CLI exit-code contract reserves code 1 for.
struct VerificationFailure : Error {
    using Error::Error;
};

}  // namespace rigiditykit
