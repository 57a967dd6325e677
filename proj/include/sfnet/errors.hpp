#pragma once

#include <stdexcept>
#include <string>

namespace sfnet {

/// Invalid user-supplied parameters (maps to CLI exit code 1).
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// A caller violated an operation's precondition (self-loop, dead node, ...).
class PreconditionError : public std::logic_error {
public:
    explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

/// File could not be read or written (maps to CLI exit code 2).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sfnet
