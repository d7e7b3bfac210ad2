#pragma once

#include <stdexcept>
#include <string>

namespace zf {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid input: malformed config, conflicting assignments, bad parameters.
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// An enumeration would exceed the configured budget. Never silently truncated.
struct BudgetError : Error {
    explicit BudgetError(const std::string& msg) : Error(msg) {}
};

/// A requested quantity is mathematically undefined for the given input
/// (zero partition function, vanishing constant term, infeasible conditioning).
struct UndefinedError : Error {
    explicit UndefinedError(const std::string& msg) : Error(msg) {}
};

}  // namespace zf
