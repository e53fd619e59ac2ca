#include "momentsum/numeric.hpp"

#include <cctype>
#include <cstddef>

#include "momentsum/errors.hpp"

namespace momentsum {

Int factorial(int m)
{
    if (m < 0)
        throw DomainError("factorial of negative argument");
    Int result = 1;
    for (int i = 2; i <= m; ++i)
        result *= i;
    return result;
}

Int double_factorial(int m)
{
    if (m < -1)
        throw DomainError("double factorial of argument below -1");
    Int result = 1;
    for (int i = m; i >= 2; i -= 2)
        result *= i;
    return result;
}

Int pow_int(const Int& base, int exp)
{
    if (exp < 0)
        throw DomainError("pow_int with negative exponent");
    Int result = 1;
    for (int i = 0; i < exp; ++i)
        result *= base;
    return result;
}

Rat pow_rat(const Rat& base, int exp)
{
    if (exp < 0) {
        if (base == 0)
            throw DomainError("pow_rat: zero base with negative exponent");
        return Rat(1) / pow_rat(base, -exp);
    }
    Rat result = 1;
    for (int i = 0; i < exp; ++i)
        result *= base;
    return result;
}

namespace {

bool all_digits(const std::string& s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

std::string strip(const std::string& s)
{
    std::size_t b = s.find_first_not_of(" \t");
    std::size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos)
        return "";
    return s.substr(b, e - b + 1);
}

}  // namespace

Rat parse_rational(const std::string& text)
{
    std::string s = strip(text);
    if (s.empty())
        throw SpecParseError("empty rational literal");

    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        s = s.substr(1);
    }

    Rat magnitude;
    std::size_t slash = s.find('/');
    std::size_t dot = s.find('.');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw SpecParseError("bad rational literal '" + text + "'");
        Int d(den);
        if (d == 0)
            throw SpecParseError("zero denominator in '" + text + "'");
        magnitude = Rat(Int(num), d);
    } else if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty())
            throw SpecParseError("bad decimal literal '" + text + "'");
        if (!whole.empty() && !all_digits(whole))
            throw SpecParseError("bad decimal literal '" + text + "'");
        if (!frac.empty() && !all_digits(frac))
            throw SpecParseError("bad decimal literal '" + text + "'");
        Int scale = pow_int(10, static_cast<int>(frac.size()));
        Int units = whole.empty() ? Int(0) : Int(whole);
        Int sub = frac.empty() ? Int(0) : Int(frac);
        magnitude = Rat(units * scale + sub, scale);
    } else {
        if (!all_digits(s))
            throw SpecParseError("bad rational literal '" + text + "'");
        magnitude = Rat(Int(s));
    }
    return negative ? -magnitude : magnitude;
}

std::string rat_to_string(const Rat& value)
{
    Int num = numerator(value);
    Int den = denominator(value);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

double rat_to_double(const Rat& value)
{
    return value.convert_to<double>();
}

}  // namespace momentsum
