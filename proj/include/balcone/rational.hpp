#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace balcone {

using Integer = mpz_class;
using Rational = mpq_class;

// Reduced "p/q" with positive denominator, or "p" when q == 1.
std::string to_string(const Rational &q);
std::string to_string(const Integer &z);

// Accepts "p", "-p", "p/q"; the result is canonicalized. Throws
// ValidationError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace balcone
