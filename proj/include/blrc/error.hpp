#pragma once

#include <stdexcept>
#include <string>

namespace blrc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad argument or precondition violation (unsupported field order, wrong vector length, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An incidence structure failed one of the partial geometry axioms.
class ValidationError : public Error {
public:
    enum class Kind {
        Structure,           // index out of range, duplicate point or line
        LineSize,            // non-uniform line size
        IsolatedPoint,       // point on no line
        PointDegree,         // non-uniform point degree
        LinesMeetTwice,      // two lines share >= 2 points
        Alpha,               // non-uniform (or zero) alpha
        Cardinality,         // counts disagree with (s+1)(st+a)/a, (t+1)(st+a)/a
        Degenerate,          // s < 1 or t < 1, or axiom 4 vacuous
    };

    ValidationError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Exhaustive search would exceed its configured work limit.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

/// Malformed input file; `line()` is 1-based, 0 when not applicable.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// File could not be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// The requested repair has no surviving local repair vector.
class RepairError : public Error {
public:
    using Error::Error;
};

}  // namespace blrc
