#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vknot {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed token or structure in a Gauss code string.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t offset)
        : Error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Well-formed tokens that do not assemble into a valid diagram.
class ValidationError : public Error {
public:
    enum class Reason {
        LabelCount,    // label does not appear exactly twice
        SamePassage,   // label appears twice with the same O/U passage
        SignMismatch,  // the two tokens of a label carry different signs
    };

    ValidationError(const std::string& what, Reason reason, long label)
        : Error(what), reason_(reason), label_(label) {}

    Reason reason() const { return reason_; }
    long label() const { return label_; }

private:
    Reason reason_;
    long label_;
};

// Operation defined only for single-circle diagrams got a link.
class NotAKnotError : public Error {
public:
    using Error::Error;
};

// Component or break-point index out of range.
class IndexError : public Error {
public:
    using Error::Error;
};

// A move's site conditions do not hold in the target diagram.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A computation would exceed its configured size cap.
class BudgetExceededError : public Error {
public:
    using Error::Error;
};

}  // namespace vknot
