#pragma once

#include <stdexcept>
#include <string>

namespace simcore {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An input violates a mathematical precondition (coprimality, gcd, parity, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A generator set with gcd > 1; the gap poset would be infinite.
class InfinitePosetError : public DomainError {
public:
    InfinitePosetError(long divisor, const std::string& what)
        : DomainError(what), divisor_(divisor) {}
    long divisor() const noexcept { return divisor_; }

private:
    long divisor_;
};

// An enumeration would produce more items than the configured cap.
class CapExceeded : public Error {
public:
    CapExceeded(unsigned long long cap, const std::string& what)
        : Error(what), cap_(cap) {}
    unsigned long long cap() const noexcept { return cap_; }

private:
    unsigned long long cap_;
};

// A closed-form identity failed an internal integrality or divisibility check.
class FormulaViolation : public Error {
public:
    using Error::Error;
};

}  // namespace simcore
