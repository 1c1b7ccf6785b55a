#pragma once

#include <stdexcept>
#include <string>

namespace maxgain {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Conditioning on a partial realization that no positive-probability realization agrees with.
class EmptyVersionSpace : public Error {
public:
    using Error::Error;
};

class InvalidInstance : public Error {
public:
    using Error::Error;
};

/// A policy tree selects an unknown element, re-selects along a path, or misses a state branch.
class MalformedPolicy : public Error {
public:
    using Error::Error;
};

/// Requested sub-policy budget is larger than the expected cost of the base policy.
class BudgetExceedsCost : public Error {
public:
    using Error::Error;
};

/// An exhaustive enumeration would exceed the configured work budget.
class EnumerationBudgetExceeded : public Error {
public:
    using Error::Error;
};

class CoverageUnreachable : public Error {
public:
    using Error::Error;
};

class PreconditionFailed : public Error {
public:
    using Error::Error;
};

class DuplicateHypothesis : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

} // namespace maxgain
