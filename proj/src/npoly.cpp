#include "momentsum/npoly.hpp"

#include <stdexcept>
#include <utility>

#include "momentsum/errors.hpp"

namespace momentsum {

NPoly NPoly::constant(Int value)
{
    NPoly p;
    if (value != 0)
        p.coefficients_[0] = std::move(value);
    return p;
}

NPoly NPoly::variable()
{
    NPoly p;
    p.coefficients_[1] = 1;
    return p;
}

NPoly NPoly::from_coefficients(std::map<int, Int> coefficients)
{
    NPoly p;
    for (auto& [deg, coef] : coefficients) {
        if (deg < 0)
            throw DomainError("negative degree in polynomial");
        if (coef != 0)
            p.coefficients_.emplace(deg, std::move(coef));
    }
    return p;
}

int NPoly::degree() const
{
    if (coefficients_.empty())
        return -1;
    return coefficients_.rbegin()->first;
}

Int NPoly::coefficient(int deg) const
{
    auto it = coefficients_.find(deg);
    return it == coefficients_.end() ? Int(0) : it->second;
}

Int NPoly::content() const
{
    Int g = 0;
    for (const auto& [deg, coef] : coefficients_)
        g = gcd(g, coef);
    return abs(g);
}

NPoly& NPoly::operator+=(const NPoly& other)
{
    for (const auto& [deg, coef] : other.coefficients_) {
        Int& slot = coefficients_[deg];
        slot += coef;
        if (slot == 0)
            coefficients_.erase(deg);
    }
    return *this;
}

NPoly& NPoly::operator-=(const NPoly& other)
{
    for (const auto& [deg, coef] : other.coefficients_) {
        Int& slot = coefficients_[deg];
        slot -= coef;
        if (slot == 0)
            coefficients_.erase(deg);
    }
    return *this;
}

NPoly& NPoly::operator*=(const Int& scalar)
{
    if (scalar == 0) {
        coefficients_.clear();
        return *this;
    }
    for (auto& [deg, coef] : coefficients_)
        coef *= scalar;
    return *this;
}

NPoly NPoly::operator*(const NPoly& other) const
{
    NPoly product;
    for (const auto& [da, ca] : coefficients_) {
        for (const auto& [db, cb] : other.coefficients_) {
            Int& slot = product.coefficients_[da + db];
            slot += ca * cb;
            if (slot == 0)
                product.coefficients_.erase(da + db);
        }
    }
    return product;
}

NPoly NPoly::divided_exact(const Int& divisor) const
{
    if (divisor == 0)
        throw std::logic_error("NPoly::divided_exact: zero divisor");
    NPoly quotient;
    for (const auto& [deg, coef] : coefficients_) {
        if (coef % divisor != 0)
            throw std::logic_error("NPoly::divided_exact: coefficient " + coef.str() +
                                   " not divisible by " + divisor.str());
        quotient.coefficients_[deg] = coef / divisor;
    }
    return quotient;
}

Int NPoly::evaluate(const Int& n) const
{
    // Horner over the dense degree range.
    Int acc = 0;
    int last = degree();
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        for (int d = last; d > it->first; --d)
            acc *= n;
        acc += it->second;
        last = it->first;
    }
    for (int d = last; d > 0; --d)
        acc *= n;
    return acc;
}

Rat NPoly::evaluate(const Rat& n) const
{
    Rat acc = 0;
    int last = degree();
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        for (int d = last; d > it->first; --d)
            acc *= n;
        acc += Rat(it->second);
        last = it->first;
    }
    for (int d = last; d > 0; --d)
        acc *= n;
    return acc;
}

double NPoly::evaluate(double n) const
{
    double acc = 0;
    int last = degree();
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        for (int d = last; d > it->first; --d)
            acc *= n;
        acc += it->second.convert_to<double>();
        last = it->first;
    }
    for (int d = last; d > 0; --d)
        acc *= n;
    return acc;
}

}  // namespace momentsum
