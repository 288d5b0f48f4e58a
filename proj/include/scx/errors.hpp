#pragma once

#include <stdexcept>
#include <string>

namespace scx {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input text could not be parsed; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// A documented precondition was violated by the caller.
class ContractError : public Error {
public:
    explicit ContractError(const std::string& msg) : Error(msg) {}
};

// An instance exceeds a size guard of an exponential-time routine.
class GuardError : public Error {
public:
    explicit GuardError(const std::string& msg) : Error(msg) {}
};

}  // namespace scx
