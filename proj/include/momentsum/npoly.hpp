#ifndef MOMENTSUM_NPOLY_HPP
#define MOMENTSUM_NPOLY_HPP

#include <map>
#include <string>

#include "momentsum/numeric.hpp"

namespace momentsum {

// Polynomial in the sample-count symbol n with exact integer coefficients.
// Zero coefficients are never stored, so equality is structural.
class NPoly {
public:
    NPoly() = default;  // the zero polynomial

    static NPoly constant(Int value);
    static NPoly variable();  // the polynomial n
    static NPoly from_coefficients(std::map<int, Int> coefficients);

    bool is_zero() const { return coefficients_.empty(); }

    // Degree of the zero polynomial is reported as -1.
    int degree() const;

    Int coefficient(int deg) const;
    const std::map<int, Int>& coefficients() const { return coefficients_; }

    // gcd of the absolute coefficient values; 0 for the zero polynomial.
    Int content() const;

    NPoly& operator+=(const NPoly& other);
    NPoly& operator-=(const NPoly& other);
    NPoly& operator*=(const Int& scalar);
    NPoly operator*(const NPoly& other) const;

    friend NPoly operator+(NPoly a, const NPoly& b) { return a += b; }
    friend NPoly operator-(NPoly a, const NPoly& b) { return a -= b; }
    friend NPoly operator*(NPoly a, const Int& s) { return a *= s; }
    friend NPoly operator*(const Int& s, NPoly a) { return a *= s; }

    // Divides every coefficient by divisor; throws std::logic_error if any
    // coefficient is not divisible. Used where integrality is an invariant.
    NPoly divided_exact(const Int& divisor) const;

    Int evaluate(const Int& n) const;
    Rat evaluate(const Rat& n) const;
    double evaluate(double n) const;

    bool operator==(const NPoly& other) const = default;

private:
    std::map<int, Int> coefficients_;  // degree -> nonzero coefficient
};

}  // namespace momentsum

#endif  // MOMENTSUM_NPOLY_HPP
