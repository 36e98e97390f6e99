#pragma once

#include <boost/rational.hpp>
#include <charconv>
#include <string>
#include <string_view>

#include "cygon/error.hpp"

namespace cygon {

// Exact rational arithmetic.  Densities, circle positions and thresholds
// are all rationals; the library never touches floating point.
using Rational = boost::rational<long long>;

inline long long floor_rational(const Rational& q) {
    long long n = q.numerator(), d = q.denominator();
    long long f = n / d;
    if (n % d != 0 && n < 0) --f;
    return f;
}

inline long long ceil_rational(const Rational& q) {
    long long n = q.numerator(), d = q.denominator();
    long long c = n / d;
    if (n % d != 0 && n > 0) ++c;
    return c;
}

// "7" for integers, "3/2" otherwise.  boost keeps values normalized with a
// positive denominator, so this form is canonical.
inline std::string format_rational(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + '/' + std::to_string(q.denominator());
}

// Accepts "P" or "P/Q" with integer P, positive integer Q.
inline Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view part) {
        long long value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc{} || ptr != part.data() + part.size())
            throw PreconditionError("not a rational: '" + std::string(text) + "'");
        return value;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    long long num = parse_int(text.substr(0, slash));
    long long den = parse_int(text.substr(slash + 1));
    if (den <= 0)
        throw PreconditionError("rational denominator must be positive: '" + std::string(text) + "'");
    return Rational(num, den);
}

}  // namespace cygon
