#pragma once

#include <stdexcept>
#include <string>

namespace compavoid {

// Base of every error raised by the library. Callers that only care about
// "validation failed" can catch this; the CLI maps it to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Binary series operation on operands truncated at different bounds.
class BoundMismatchError : public Error {
public:
    using Error::Error;
};

// Coefficient requested beyond the truncation bound; the value is unknown.
class OutOfRangeError : public Error {
public:
    using Error::Error;
};

// Reciprocal of a series whose constant term is not +1 or -1.
class NotInvertibleError : public Error {
public:
    using Error::Error;
};

class InvalidWordError : public Error {
public:
    using Error::Error;
};

class InvalidParameterError : public Error {
public:
    using Error::Error;
};

// A forbidden list in which one word is a factor of another.
class ReducednessError : public Error {
public:
    using Error::Error;
};

class NotEasyCaseError : public Error {
public:
    using Error::Error;
};

// Elimination found no unit pivot in a column. Unreachable for reduced lists,
// so it is reported as an internal invariant violation rather than bad input.
class PivotError : public Error {
public:
    using Error::Error;
};

// Brute-force enumeration refused because n exceeds the configured cap.
class EnumerationCapError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace compavoid
