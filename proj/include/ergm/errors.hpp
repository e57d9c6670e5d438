#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ergm {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed argument: bad vertex pair, dimension mismatch, empty spec list, ...
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Request exceeds a hard capacity limit (k > 8 vertices, n > 12 statistics).
class CapacityExceeded : public Error {
public:
    using Error::Error;
};

/// Run configuration rejected; carries the offending field path.
class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string& what)
        : Error(field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// Cache file is corrupt or keyed to a different (k, statistics) request.
class CacheError : public Error {
public:
    using Error::Error;
};

/// Separating direction requested for a target inside the hull.
class NotSeparable : public Error {
public:
    using Error::Error;
};

/// A trajectory row violated its proven lower bound; indicates a bug.
class ViolatedBound : public Error {
public:
    using Error::Error;
};

/// Internal consistency check failed (certificate unsound, simplex stuck).
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace ergm
