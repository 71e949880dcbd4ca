#pragma once

#include <stdexcept>
#include <string>

namespace cotlab {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Failures tied to where a quantity is evaluated: outside a domain, at a
/// singular point, past a blow-up. The CLI maps these to exit code 3.
class DomainError : public Error {
public:
    using Error::Error;
};

class OutOfDomain : public DomainError {
public:
    using DomainError::DomainError;
};

class StencilOutOfDomain : public DomainError {
public:
    using DomainError::DomainError;
};

class SingularPoint : public DomainError {
public:
    using DomainError::DomainError;
};

class StartSingular : public DomainError {
public:
    using DomainError::DomainError;
};

class BeyondBlowup : public DomainError {
public:
    using DomainError::DomainError;
};

class BranchUndefined : public DomainError {
public:
    using DomainError::DomainError;
};

class RootNotBracketed : public DomainError {
public:
    using DomainError::DomainError;
};

class ValidityViolated : public DomainError {
public:
    using DomainError::DomainError;
};

class HypothesisViolated : public Error {
public:
    using Error::Error;
};

class NotApplicable : public Error {
public:
    using Error::Error;
};

class DegenerateParams : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class FrameNotBasis : public Error {
public:
    using Error::Error;
};

} // namespace cotlab
