#pragma once

#include <stdexcept>
#include <string>

namespace vffc {

/// Malformed or out-of-range input supplied by the caller.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A documented precondition on an otherwise well-formed value does not hold.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The request exceeds a hard size limit (dense matrices, register widths).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input lies outside the mathematical domain of the operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Non-finite values or loss of unitarity detected at run time.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The operation is well defined but not implemented for this input class.
class UnsupportedError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace vffc
