#pragma once

#include <stdexcept>
#include <string>

namespace annot {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Filesystem / stream failures (missing files, unreadable directories).
class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed input data (bad label files, bad PGM, bad manifest).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Argument outside its mathematical domain (df out of range, avg_len <= 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Persisted index file does not start with the expected magic bytes.
class MagicError : public ParseError {
public:
    using ParseError::ParseError;
};

/// Persisted index declares a format version this build cannot read.
class VersionError : public ParseError {
public:
    using ParseError::ParseError;
};

/// Persisted file is shorter than its header declares.
class TruncatedError : public ParseError {
public:
    using ParseError::ParseError;
};

} // namespace annot
