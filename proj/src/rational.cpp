#include "balcone/rational.hpp"

#include "balcone/errors.hpp"

#include <cctype>

namespace balcone {

DegreeMismatchError::DegreeMismatchError(int expected, int actual)
    : ValidationError("degree mismatch: expected total degree " +
                      std::to_string(expected) + ", got " +
                      std::to_string(actual)),
      expected_(expected), actual_(actual) {}

std::string to_string(const Rational &q) { return q.get_str(); }

std::string to_string(const Integer &z) { return z.get_str(); }

namespace {

bool is_decimal_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

Integer integer_from(std::string_view s) {
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

} // namespace

Integer parse_integer(std::string_view text) {
    if (!is_decimal_integer(text))
        throw ValidationError("not an integer: '" + std::string(text) + "'");
    return integer_from(text);
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_decimal_integer(num) || !is_decimal_integer(den) ||
        den.front() == '-' || den.front() == '+')
        throw ValidationError("not a rational: '" + std::string(text) + "'");
    Integer d = integer_from(den);
    if (d == 0)
        throw ValidationError("zero denominator in '" + std::string(text) +
                              "'");
    Rational q(integer_from(num), d);
    q.canonicalize();
    return q;
}

} // namespace balcone
