#pragma once
// Exception types shared across the library.

#include <stdexcept>
#include <string>

namespace stringc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A word refers to a generator outside the alphabet of the structure it is
// used with, or a presentation is otherwise malformed.
struct BadWord : Error {
    using Error::Error;
};

// A family parameter violates its constraint; the message names the
// constraint that failed.
struct BadParam : Error {
    using Error::Error;
};

// Coset enumeration hit max_cosets or max_steps before closing.
struct LimitExceeded : Error {
    using Error::Error;
};

// Element enumeration of a subgroup exceeded its cap.
struct CapExceeded : Error {
    using Error::Error;
};

// Text input could not be parsed; the message carries line context.
struct ParseError : Error {
    using Error::Error;
};

// A check was asked about a structure it does not apply to.
struct NotApplicable : Error {
    using Error::Error;
};

// The target of a quotient comparison lacks a positive certificate.
struct TargetNotCertified : Error {
    using Error::Error;
};

} // namespace stringc
