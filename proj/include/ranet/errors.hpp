#pragma once

#include <stdexcept>
#include <string>

namespace ranet {

// Base for everything this library throws.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Group parameters failed validation, or a config file is unusable.
struct ConfigError : Error {
    using Error::Error;
};

// The requested backend is declared but not built into this library.
struct UnsupportedBackendError : ConfigError {
    using ConfigError::ConfigError;
};

// Elements from different group instances were mixed in one operation.
struct ParamMismatchError : Error {
    using Error::Error;
};

struct InvalidIdentityError : Error {
    using Error::Error;
};

struct InvalidMessageError : Error {
    using Error::Error;
};

struct InvalidArgumentError : Error {
    using Error::Error;
};

struct InvalidPlanError : Error {
    using Error::Error;
};

struct PoolExhaustedError : Error {
    using Error::Error;
};

struct RoutingError : Error {
    using Error::Error;
};

struct SimError : Error {
    using Error::Error;
};

struct UndefinedDividerError : Error {
    using Error::Error;
};

} // namespace ranet
