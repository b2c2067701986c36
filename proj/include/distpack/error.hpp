#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace distpack {

// Base of every failure the library reports. Infeasibility is never an
// exception; it is a regular return value.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonPositiveValue : public Error {
public:
    using Error::Error;
};

class PatternExplosion : public Error {
public:
    using Error::Error;
};

class TimeoutExceeded : public Error {
public:
    using Error::Error;
};

class PatternSetMismatch : public Error {
public:
    using Error::Error;
};

class OracleTooLarge : public Error {
public:
    using Error::Error;
};

class InstanceTooLarge : public Error {
public:
    using Error::Error;
};

class InvalidPacking : public Error {
public:
    using Error::Error;
};

class DerivationError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace distpack
