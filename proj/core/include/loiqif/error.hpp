#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace loiqif {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments that are not covered by a more specific error.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Two values that must share a domain do not.
class DomainMismatch : public Error {
public:
    using Error::Error;
};

/// A kernel map does not cover every atom of its domain.
class MissingMapping : public Error {
public:
    using Error::Error;
};

/// A set of blocks overlaps or fails to cover its domain.
class InvalidPartition : public Error {
public:
    using Error::Error;
};

/// Negative masses, masses not summing to one, malformed rationals.
class InvalidDistribution : public Error {
public:
    using Error::Error;
};

/// Attacker configuration is inconsistent with itself or with a program.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// The input space to enumerate is larger than the configured cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// A result failed its own consistency check.
class InternalError : public Error {
public:
    using Error::Error;
};

/// Renaming for self-composition produced clashing names.
class CompositionError : public InternalError {
public:
    using InternalError::InternalError;
};

struct SourcePos {
    std::size_t line = 1;
    std::size_t column = 1;
};

/// Syntax error in a program source, with the set of tokens that would
/// have been accepted at that point.
class ParseError : public Error {
public:
    ParseError(SourcePos pos, std::string message, std::vector<std::string> expected = {});

    SourcePos position() const noexcept { return pos_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    SourcePos pos_;
    std::vector<std::string> expected_;
};

} // namespace loiqif
