#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pbn {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(unsigned n)
{
    Integer result = 1;
    for (unsigned i = 2; i <= n; ++i)
        result *= i;
    return result;
}

inline Integer pow2(unsigned n)
{
    Integer result = 1;
    result <<= n;
    return result;
}

inline Rational make_rational(const Integer& num, const Integer& den)
{
    return Rational(num, den);
}

inline bool is_integer(const Rational& q)
{
    return boost::multiprecision::denominator(q) == 1;
}

/// Always "p/q" with q > 0, including integers ("2/1") and zero ("0/1").
inline std::string to_string(const Rational& q)
{
    return boost::multiprecision::numerator(q).str() + "/"
        + boost::multiprecision::denominator(q).str();
}

/// Parses "p/q" or "p".
inline Rational parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(Integer(text));
    return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
}

} // namespace pbn
