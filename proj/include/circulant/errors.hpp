#pragma once

#include <stdexcept>
#include <string>

namespace circulant {

/// Base class for every domain error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A value reduced to 0 mod n, which no connection set may contain.
class ZeroJumpError : public Error {
public:
    using Error::Error;
};

/// Multiplier not coprime to the modulus.
class NotAUnitError : public Error {
public:
    using Error::Error;
};

/// Theta parameter r with gcd(n, r) = 1; the map degenerates to the identity.
class InvalidRError : public Error {
public:
    using Error::Error;
};

/// No jump of the graph is divisible by m = gcd(n, r).
class NoMultipleOfMError : public Error {
public:
    using Error::Error;
};

/// Family index outside [1, p].
class BadIndexError : public Error {
public:
    using Error::Error;
};

/// A family construction produced fewer elements than it should.
class DegenerateSetError : public Error {
public:
    using Error::Error;
};

/// Extended-family multiples with gcd != 1.
class GcdNotOneError : public Error {
public:
    using Error::Error;
};

/// A structural guarantee failed to hold; indicates a bug, not bad input.
class TheoremViolationError : public Error {
public:
    using Error::Error;
};

/// Two graphs of different order where equal order is required.
class OrderMismatchError : public Error {
public:
    using Error::Error;
};

/// A vertex map that is not a bijection on Z_n.
class NotABijectionError : public Error {
public:
    using Error::Error;
};

/// Verdict kind that carries no convertible witness.
class NotAWitnessVerdictError : public Error {
public:
    using Error::Error;
};

/// Candidate enumeration larger than the caller's budget.
class BudgetExceededError : public Error {
public:
    using Error::Error;
};

/// Malformed graph text; position() is the byte offset of the problem.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Referenced golden file does not exist.
class MissingGoldenError : public Error {
public:
    using Error::Error;
};

}  // namespace circulant
