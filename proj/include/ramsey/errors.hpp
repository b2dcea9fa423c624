#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ramsey {

/// Base class for every error the library reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An exhaustive computation would exceed its configured work budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, double required, double budget)
        : Error(what + " (needs ~" + std::to_string(required) + " evaluations, budget " +
                std::to_string(budget) + ")"),
          required_(required),
          budget_(budget)
    {
    }

    double required() const noexcept { return required_; }
    double budget() const noexcept { return budget_; }

private:
    double required_;
    double budget_;
};

/// Malformed input file; line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace ramsey
