#ifndef MOMENTSUM_NUMERIC_HPP
#define MOMENTSUM_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace momentsum {

// Exact arbitrary-precision integers and rationals. All engine arithmetic
// is exact; doubles appear only in sampling and in annotated renderings.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int factorial(int m);

// m!! = m(m-2)(m-4)...; by convention 0!! = (-1)!! = 1.
Int double_factorial(int m);

Int pow_int(const Int& base, int exp);
Rat pow_rat(const Rat& base, int exp);

// Accepts "a/b", integer, and plain decimal literals ("-3", "1/2", "0.25").
// Decimals convert exactly. Throws SpecParseError on anything else.
Rat parse_rational(const std::string& text);

// "a/b", or just "a" when the denominator is 1.
std::string rat_to_string(const Rat& value);

double rat_to_double(const Rat& value);

}  // namespace momentsum

#endif  // MOMENTSUM_NUMERIC_HPP
