#pragma once

#include <stdexcept>
#include <string>

namespace bpsdt {

// Caller supplied something outside an operation's domain (bad index, zero
// denominator, mismatched kinds, malformed file).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An identity that must hold mathematically did not (e.g. the DT divisor sum
// not divisible by n^2). Indicates a bug, never bad user data.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

[[noreturn]] inline void fail_input(const std::string& msg) { throw InvalidInput(msg); }

[[noreturn]] inline void fail_consistency(const std::string& msg) { throw ConsistencyError(msg); }

} // namespace detail

} // namespace bpsdt
