#pragma once

#include <stdexcept>
#include <string>

namespace cwilf {

// Malformed user data or a violated precondition.
class InvalidInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured budget (downset states, oracle size, isomorphism size, ...)
// was exceeded. Never silently truncates a result.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Internal consistency violation; signals a bug, not bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace cwilf
