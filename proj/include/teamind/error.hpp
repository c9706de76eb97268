#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace teamind {

/// Base class of everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: out-of-range generators, universe mismatches,
/// unknown attributes, parameter bounds.
class InputError : public Error {
public:
    using Error::Error;
};

/// Malformed team input (CSV or JSON). Carries a 1-based line number when
/// the offending record is known, 0 otherwise.
class FormatError : public Error {
public:
    explicit FormatError(const std::string& msg, std::size_t line = 0)
        : Error(line ? msg + " (line " + std::to_string(line) + ")" : msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// An enumeration route was asked for more elements than its cap allows.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// The operation's precondition does not hold for these inputs (e.g. a
/// dividing witness was requested for an independent configuration).
class NotApplicableError : public Error {
public:
    using Error::Error;
};

/// The sequence shape is outside the natively supported classes and the
/// bounded fallback was not attempted or not permitted.
class UnsupportedShapeError : public Error {
public:
    using Error::Error;
};

/// The bounded fallback search ran out of budget without a hit. Says
/// nothing about nonexistence.
class NotFoundError : public Error {
public:
    using Error::Error;
};

/// Atom syntax outside the variable-only fragment (e.g. function terms).
class UnsupportedFeatureError : public Error {
public:
    using Error::Error;
};

/// A stated precondition was violated (e.g. splitting the zero element).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// DSL syntax error with the byte offset of the first offending character
/// and the set of token classes that would have been accepted there.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& msg, std::size_t offset, std::vector<std::string> expected)
        : Error(msg + " at byte " + std::to_string(offset)),
          offset_(offset),
          expected_(std::move(expected)) {}
    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

}  // namespace teamind
