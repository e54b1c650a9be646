#pragma once

#include <stdexcept>
#include <string>

namespace qalg {

/// Base for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two operands were truncated at different z-orders.
class TruncationMismatch : public Error {
public:
    TruncationMismatch(int lhs, int rhs)
        : Error("truncation order mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// A mathematically undefined request (division by zero, div_z of a series with constant term, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The commutator table would make the rewriting loop forever.
class NonTerminatingTable : public Error {
public:
    using Error::Error;
};

/// Malformed textual input. `field` names the offending field when known, `line` is 1-based or 0.
class ParseError : public Error {
public:
    ParseError(std::string message, std::string field = {}, int line = 0)
        : Error(format(message, field, line)), field_(std::move(field)), line_(line) {}

    const std::string& field() const noexcept { return field_; }
    int line() const noexcept { return line_; }

private:
    static std::string format(const std::string& message, const std::string& field, int line) {
        std::string out;
        if (line > 0) out += "line " + std::to_string(line) + ": ";
        if (!field.empty()) out += "field '" + field + "': ";
        return out + message;
    }

    std::string field_;
    int line_;
};

/// An order-by-order solve had no solution. `order` is the failing z-degree.
class NoSolution : public Error {
public:
    NoSolution(const std::string& what, int order)
        : Error(what + " (order " + std::to_string(order) + ")"), order_(order) {}
    int order() const noexcept { return order_; }

private:
    int order_;
};

}  // namespace qalg
