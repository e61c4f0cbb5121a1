#pragma once

#include <stdexcept>
#include <string>

namespace aaslab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OrderCapExceeded : public Error {
public:
    using Error::Error;
};

class InvalidSpec : public Error {
public:
    using Error::Error;
};

class LatticeCapExceeded : public Error {
public:
    using Error::Error;
};

class LatticeUnavailable : public Error {
public:
    using Error::Error;
};

class OrderNotInGroup : public Error {
public:
    explicit OrderNotInGroup(unsigned order);
    unsigned order() const noexcept { return order_; }

private:
    unsigned order_;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class PreconditionNotMet : public Error {
public:
    using Error::Error;
};

class NoOddProduct : public Error {
public:
    using Error::Error;
};

/// Raised when an operation needs an AAS group. The message names an
/// infinite family of non-signatures that witnesses the failure.
class NotAas : public Error {
public:
    using Error::Error;
};

/// Parse failure with a 0-based column into the offending text.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace aaslab
