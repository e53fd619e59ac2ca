#ifndef MOMENTSUM_ERRORS_HPP
#define MOMENTSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace momentsum {

// Base class for all recoverable failures raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid argument values (p out of range, order cap exceeded, bad n, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// An evaluation needed a raw moment that the assignment does not supply.
class MissingMomentError : public Error {
public:
    explicit MissingMomentError(int index)
        : Error("missing raw moment u" + std::to_string(index)), index(index) {}
    int index;
};

// A moment of the requested order does not exist (heavy tails, or beyond
// the range covered by an explicit moment list).
class InfiniteMomentError : public Error {
public:
    InfiniteMomentError(const std::string& dist, int index)
        : Error("moment u" + std::to_string(index) + " of " + dist +
                " is infinite or unknown"),
          index(index) {}
    int index;
};

// A symmetric-only computation was given a distribution with a nonzero
// odd moment.
class AsymmetryError : public Error {
public:
    explicit AsymmetryError(int index)
        : Error("odd raw moment u" + std::to_string(index) +
                " is nonzero; a distribution symmetric about 0 is required"),
          index(index) {}
    int index;
};

class ZeroVarianceError : public Error {
public:
    ZeroVarianceError() : Error("second raw moment is zero; normalization undefined") {}
};

class NotSamplableError : public Error {
public:
    explicit NotSamplableError(const std::string& dist)
        : Error(dist + " provides moments only and cannot be sampled") {}
};

// The brute-force enumeration would exceed its tuple budget.
class BudgetExceededError : public Error {
public:
    BudgetExceededError(const std::string& tuples, long long budget)
        : Error("brute force needs " + tuples + " tuples; budget is " +
                std::to_string(budget)) {}
};

class UnknownDistributionError : public Error {
public:
    explicit UnknownDistributionError(const std::string& name)
        : Error("unknown distribution '" + name + "'") {}
};

// Malformed distribution spec or rational literal.
class SpecParseError : public Error {
public:
    using Error::Error;
};

}  // namespace momentsum

#endif  // MOMENTSUM_ERRORS_HPP
