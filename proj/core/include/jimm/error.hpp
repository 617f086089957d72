#pragma once

#include <stdexcept>
#include <string>

namespace jimm {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual/JSON input. CLI exit code 2.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// A budget (terms, bits, digits, iterations) was exhausted before the result
// could be certified. CLI exit code 3.
struct BudgetError : Error {
    explicit BudgetError(const std::string& msg) : Error(msg) {}
};

struct PeriodNotFound : BudgetError {
    explicit PeriodNotFound(const std::string& msg) : BudgetError(msg) {}
};

struct InsufficientTerms : BudgetError {
    explicit InsufficientTerms(const std::string& msg) : BudgetError(msg) {}
};

struct Undecided : BudgetError {
    explicit Undecided(const std::string& msg) : BudgetError(msg) {}
};

struct PrecisionExhausted : BudgetError {
    explicit PrecisionExhausted(const std::string& msg) : BudgetError(msg) {}
};

// Domain violations.
struct NotHyperbolic : Error {
    explicit NotHyperbolic(const std::string& msg) : Error(msg) {}
};

struct NobleInput : Error {
    explicit NobleInput(const std::string& msg) : Error(msg) {}
};

struct ExcludedVertex : Error {
    explicit ExcludedVertex(const std::string& msg) : Error(msg) {}
};

struct DepthTooLarge : Error {
    explicit DepthTooLarge(const std::string& msg) : Error(msg) {}
};

struct InvalidBracket : Error {
    explicit InvalidBracket(const std::string& msg) : Error(msg) {}
};

}  // namespace jimm
