#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pixelbreak {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or truncated image stream. The message names the byte offset
// where parsing failed.
class FormatError : public Error {
public:
    FormatError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Operation is valid in general but not supported by this implementation
// (e.g. serializing a bit depth PPM cannot carry).
class CapabilityError : public Error {
public:
    using Error::Error;
};

// Image dimensions violate an operation's requirements.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Out-of-range or inconsistent parameter value.
class ParameterError : public Error {
public:
    using Error::Error;
};

// An encryption oracle behaved inconsistently with the declared scheme or
// key (sentinel values missing or duplicated in an encrypted helper).
class InconsistentOracleError : public Error {
public:
    using Error::Error;
};

// Command-line usage error; the CLI maps this to exit status 2.
class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace pixelbreak
