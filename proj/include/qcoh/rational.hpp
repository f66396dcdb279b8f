#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcoh {

// Exact rational scalar. boost keeps it reduced with positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational rat(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
}

inline Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Rational pow_rat(const Rational& x, int n) {
    if (n < 0) {
        if (x == 0) throw std::domain_error("0^negative");
        return pow_rat(1 / x, -n);
    }
    Rational r = 1;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

// "3", "-7", "28/3"; no spaces, denominator positive in output.
inline std::string rat_str(const Rational& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) s += "/" + denominator(x).str();
    return s;
}

} // namespace qcoh
