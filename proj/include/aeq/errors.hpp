#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace aeq {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Malformed polynomial text or input record.
class ParseError : public Error {
   public:
    using Error::Error;
};

class NotPrimeError : public Error {
   public:
    explicit NotPrimeError(std::uint64_t n) : Error(std::to_string(n) + " is not prime"), value(n) {}
    std::uint64_t value;
};

// Raised by the factorization primitives when the input has a repeated factor.
class NotSquarefreeError : public Error {
   public:
    using Error::Error;
};

// The prime divides the polynomial discriminant; no arithmetic type is computed there.
class ExcludedPrimeError : public Error {
   public:
    explicit ExcludedPrimeError(std::uint64_t p)
        : Error("excluded prime " + std::to_string(p) + " divides the polynomial discriminant"), prime(p) {}
    std::uint64_t prime;
};

class DegreeMismatchError : public Error {
   public:
    DegreeMismatchError(int a, int b)
        : Error("degree mismatch: " + std::to_string(a) + " vs " + std::to_string(b)), left(a), right(b) {}
    int left;
    int right;
};

class InsufficientDataError : public Error {
   public:
    using Error::Error;
};

// Defining polynomial rejected: non-monic, degree 0, zero discriminant, or reducible.
class InvalidFieldError : public Error {
   public:
    using Error::Error;
};

class IncompatibleTallyError : public Error {
   public:
    using Error::Error;
};

class ResourceLimitError : public Error {
   public:
    using Error::Error;
};

}  // namespace aeq
