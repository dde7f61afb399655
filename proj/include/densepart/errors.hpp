#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace densepart {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the documented domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed edge-list input. Carries the 1-based line number.
class ParseError : public Error {
public:
    enum class Kind { Malformed, VertexOutOfRange, LoopEdge, DuplicateEdge, EdgeCountMismatch };

    ParseError(Kind kind, std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

    Kind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }

private:
    Kind kind_;
    std::size_t line_;
};

/// An enumeration would exceed its configured work budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// An iterative numerical method failed to converge.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

}  // namespace densepart
