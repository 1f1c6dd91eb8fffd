#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace forcelab {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `offset` is the byte offset into the offending line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Structurally invalid construction input (loops, endpoints out of range, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Arguments outside the domain of a formula or operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Input exceeds a configured exact-search or representation cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

}  // namespace forcelab
