#pragma once

#include <stdexcept>
#include <string>

namespace hallinv {

// Malformed or unsupported input. The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A search exceeded its budget. The CLI maps this to exit code 2.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal consistency check failed.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& what)
{
    if (!ok) throw InvariantError(what);
}

} // namespace hallinv
