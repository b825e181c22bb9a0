#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace p2ix {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text. Messages carry a byte offset or line number.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t byte_offset)
        : Error(msg + " (byte " + std::to_string(byte_offset) + ")"),
          byte_offset(byte_offset) {}
    explicit ParseError(const std::string& msg) : Error(msg), byte_offset(0) {}
    std::size_t byte_offset;
};

/// Bad configuration value or unknown configuration key.
struct ConfigError : Error {
    using Error::Error;
};

/// Inconsistent data: duplicate ids, unknown ids, empty collections.
struct DataError : Error {
    using Error::Error;
};

/// Index file cannot be read: bad magic, version mismatch, checksum failure.
struct IndexIoError : Error {
    using Error::Error;
};

}  // namespace p2ix
