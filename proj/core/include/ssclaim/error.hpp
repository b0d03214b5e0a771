#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ssclaim {

/// A parameter lies outside the domain of the requested formula.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A bracketed solve was requested on an interval without a sign change.
class NoBracketError : public std::runtime_error {
public:
    NoBracketError(const std::string& what, double lo, double hi, double f_lo, double f_hi)
        : std::runtime_error(what), lo_(lo), hi_(hi), f_lo_(f_lo), f_hi_(f_hi) {}

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    double f_lo() const noexcept { return f_lo_; }
    double f_hi() const noexcept { return f_hi_; }

private:
    double lo_, hi_, f_lo_, f_hi_;
};

/// The root finder exhausted its iteration budget.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A requested year window is not covered by a rate series.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

}  // namespace ssclaim
