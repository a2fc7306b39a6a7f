#ifndef TRAPSEM_ERRORS_HPP
#define TRAPSEM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace trapsem {

// Base for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed program text. Positions are 1-based.
class ParseError : public Error {
public:
    ParseError(int line, int col, const std::string& what)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + what),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

// A configured resource cap (state count, rule count, enumeration size) was exceeded.
class CapError : public Error {
public:
    using Error::Error;
};

// Bad argument: wrong atom table, empty set where non-empty required, unknown name, ...
class InvalidArgError : public Error {
public:
    using Error::Error;
};

// Two interpretations disagree on a defined atom where consistency is required.
class InconsistencyError : public InvalidArgError {
public:
    InconsistencyError(const std::string& atom)
        : InvalidArgError("inconsistent interpretations: atom '" + atom + "' has conflicting defined values"),
          atom_(atom) {}
    const std::string& atom() const { return atom_; }

private:
    std::string atom_;
};

// A documented operation precondition does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace trapsem

#endif
