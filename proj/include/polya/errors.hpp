#pragma once

#include <stdexcept>
#include <string>

namespace polya {

// Base of every error raised by the library. The CLI maps the subclasses
// onto exit codes (domain problems -> 2, numerical failures -> 3).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class EnumerationTooLarge : public DomainError {
public:
    using DomainError::DomainError;
};

class OverflowRisk : public DomainError {
public:
    using DomainError::DomainError;
};

class DivergentIntegral : public DomainError {
public:
    using DomainError::DomainError;
};

class NonConvergence : public Error {
public:
    using Error::Error;
};

class ToleranceNotMet : public Error {
public:
    using Error::Error;
};

} // namespace polya
