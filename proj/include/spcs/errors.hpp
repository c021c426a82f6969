#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spcs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed edge-list line; line numbers are 1-based.
struct ParseError : Error {
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

struct EmptyGraphError : Error {
    EmptyGraphError() : Error("graph is empty after cleaning") {}
};

// Requested size t outside [1, n].
struct SizeError : Error {
    using Error::Error;
};

// Input violates an operation's precondition (not a k-core, disconnected, ...).
struct ContractError : Error {
    using Error::Error;
};

struct BudgetError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace spcs
