#pragma once

#include <stdexcept>
#include <string>

namespace siegelp {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two scalars from different quadratic fields were combined.
class ContextError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// A value would leave the quadratic field of the current computation.
class NotInField : public Error {
public:
    using Error::Error;
};

/// Taylor expansion requested for a genuinely Laurent numerator.
class NegativeExponent : public Error {
public:
    using Error::Error;
};

class UnsupportedPrime : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A denominator vanishes at the chosen sample point.
class PoleAtSample : public Error {
public:
    using Error::Error;
};

class ReductionFailure : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace siegelp
