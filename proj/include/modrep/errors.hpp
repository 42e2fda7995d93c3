#pragma once

#include <stdexcept>
#include <string>

namespace modrep {

// Error taxonomy; the CLI maps these onto its exit-status contract.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: group files, certificates, flags.  Exit status 2.
struct ParseError : Error {
    using Error::Error;
};

// Generator closure exceeded the configured order cap.
struct GroupTooLargeError : ParseError {
    using ParseError::ParseError;
};

// The target simple is not in the principal block, so no chain exists.
// Exit status 3.
struct NotInPrincipalBlockError : Error {
    using Error::Error;
};

// A bounded search (self-Ext degree, fallback chain search, randomized
// chop) ran out of budget without a certified answer.  Exit status 4.
struct BoundExhaustedError : Error {
    using Error::Error;
};

// Raised when an operation requires a non-projective module.
struct ProjectiveModuleError : Error {
    using Error::Error;
};

// An internal consistency check failed (e.g. a sequence that a verified
// hypothesis says must be non-split turned out split).  Never expected.
struct InvariantViolation : Error {
    using Error::Error;
};

}  // namespace modrep
