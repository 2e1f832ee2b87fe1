#pragma once

#include <stdexcept>
#include <string>

namespace cralg {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad user input: parse errors, invalid configs, violated operation preconditions.
/// The CLI maps these to exit code 1.
struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg) {}
};

/// An internal invariant tripped (a certificate failed to replay, a solved
/// symmetry failed re-verification, ...). The CLI maps these to exit code 2.
struct VerifyError : Error {
    explicit VerifyError(const std::string& msg) : Error(msg) {}
};

} // namespace cralg
