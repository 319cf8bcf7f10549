#pragma once

#include <stdexcept>
#include <string>

namespace torodec {

// Input text could not be parsed (EGF, graph6, decomposition JSON).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Well-formed input violates an operation's contract (unknown vertex,
// disconnected graph passed to euler_characteristic, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal invariant failed.  This signals a bug in a recipe or in the
// engine itself, never bad user input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace torodec
