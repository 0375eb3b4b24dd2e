#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphidx {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OutOfRangeError : public Error {
public:
    using Error::Error;
};

class LoopError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class ParityError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class DensityError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class GenerationFailedError : public Error {
public:
    using Error::Error;
};

/// Malformed input text; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace graphidx
