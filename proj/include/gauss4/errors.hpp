#ifndef GAUSS4_ERRORS_HPP
#define GAUSS4_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gauss4 {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed input text (bad token, bad catalog entry).
struct SyntaxError : Error {
    using Error::Error;
};

// Raised when a structurally well-formed object violates an invariant.
struct ValidationError : Error {
    using Error::Error;
};

struct UnknownCrossing : Error {
    explicit UnknownCrossing(int id)
        : Error("unknown crossing id " + std::to_string(id)) {}
};

struct IndexError : Error {
    using Error::Error;
};

struct ArityError : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

struct MissingKey : Error {
    explicit MissingKey(const std::string& key) : Error("missing catalog key " + key) {}
};

struct MissingInvariant : Error {
    using Error::Error;
};

// Truncated Laurent arithmetic escaped the representable exponent window.
struct RangeOverflow : Error {
    using Error::Error;
};

// A substituted Homfly polynomial kept a pole at x = 0.
struct PrincipalPartNonzero : Error {
    using Error::Error;
};

} // namespace gauss4

#endif
