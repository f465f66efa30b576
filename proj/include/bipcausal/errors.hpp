#pragma once

#include <stdexcept>
#include <string>

namespace bipcausal {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A series or vector is too short for the requested operation.
class LengthError : public Error {
public:
    using Error::Error;
};

/// An input value is outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Design matrix is rank deficient.
class SingularityError : public Error {
public:
    using Error::Error;
};

/// Fewer observations than parameters.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// Series do not share enough observations, or models were fitted on different samples.
class AlignmentError : public Error {
public:
    using Error::Error;
};

/// A fit has no residual variance left where the operation requires some.
class DegenerateFitError : public Error {
public:
    using Error::Error;
};

/// Inner join produced no rows.
class EmptyPanelError : public Error {
public:
    using Error::Error;
};

/// Malformed input file.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Configuration is inconsistent or references missing resources.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A data file violates its declared integrity constraints.
class IntegrityError : public Error {
public:
    using Error::Error;
};

} // namespace bipcausal
