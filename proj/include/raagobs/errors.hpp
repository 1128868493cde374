#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace raagobs {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph input: self-loops, out-of-range ids, duplicate labels.
class GraphError : public Error {
public:
    using Error::Error;
};

/// Malformed file or text input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Clique enumeration hit its configured cap.
class CliqueOverflow : public Error {
public:
    explicit CliqueOverflow(std::size_t cap)
        : Error("clique count exceeds cap of " + std::to_string(cap)), cap_(cap) {}

    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

/// An exact search ran out of its node budget before deciding.
class BudgetExhausted : public Error {
public:
    using Error::Error;
};

}  // namespace raagobs
