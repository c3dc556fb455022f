#ifndef WALLCROSS_RATIONAL_HPP
#define WALLCROSS_RATIONAL_HPP

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace wallcross
{

/// Arbitrary precision rational, always kept in canonical form.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0) {
        raise(ErrorKind::InvalidInput, "zero denominator");
    }
    Rational q{Integer(num), Integer(den)};
    q.canonicalize();
    return q;
}

inline int sign(const Rational &q) noexcept
{
    return sgn(q);
}

inline bool is_integer(const Rational &q)
{
    return q.get_den() == 1;
}

inline double to_double(const Rational &q)
{
    return q.get_d();
}

/// "p/q" in lowest terms, or "p" when the denominator is one.
inline std::string to_string(const Rational &q)
{
    return q.get_str(10);
}

/// Strict parser for "[+-]digits[/digits]". Offending column is reported 1-based.
inline std::optional<std::string> rational_syntax_error(std::string_view s)
{
    if (s.empty()) {
        return "empty rational";
    }
    std::size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
        pos = 1;
    }
    const auto slash = s.find('/');
    const auto num = s.substr(pos, slash == std::string_view::npos ? std::string_view::npos : slash - pos);
    for (std::size_t i = 0; i < num.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(num[i]))) {
            return "unexpected character '" + std::string(1, num[i]) + "' at column " + std::to_string(pos + i + 1);
        }
    }
    if (num.empty()) {
        return "missing numerator at column " + std::to_string(pos + 1);
    }
    if (slash != std::string_view::npos) {
        const auto den = s.substr(slash + 1);
        for (std::size_t i = 0; i < den.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(den[i]))) {
                return "unexpected character '" + std::string(1, den[i]) + "' at column "
                       + std::to_string(slash + 2 + i);
            }
        }
        if (den.empty()) {
            return "missing denominator at column " + std::to_string(slash + 2);
        }
        if (den.find_first_not_of('0') == std::string_view::npos) {
            return "zero denominator at column " + std::to_string(slash + 2);
        }
    }
    return std::nullopt;
}

inline Rational parse_rational(std::string_view s)
{
    if (auto err = rational_syntax_error(s)) {
        raise(ErrorKind::InvalidInput, "invalid rational '" + std::string(s) + "': " + *err);
    }
    std::string text(s);
    if (text[0] == '+') {
        text.erase(0, 1);
    }
    Rational q(text, 10);
    q.canonicalize();
    return q;
}

/// Exact square root when q is the square of a rational.
inline std::optional<Rational> rational_sqrt(const Rational &q)
{
    if (sgn(q) < 0) {
        return std::nullopt;
    }
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
        return std::nullopt;
    }
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    Rational r(n, d);
    r.canonicalize();
    return r;
}

/// Scales a rational vector to coprime integers with the first nonzero entry
/// positive. The zero vector is returned unchanged.
inline std::vector<Rational> primitive_integer_vector(const std::vector<Rational> &v)
{
    Integer l = 1;
    for (const auto &q : v) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    std::vector<Integer> ints;
    ints.reserve(v.size());
    Integer g = 0;
    for (const auto &q : v) {
        Integer n = q.get_num() * (l / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        ints.push_back(n);
    }
    if (g == 0) {
        return v;
    }
    int lead = 0;
    for (const auto &n : ints) {
        if (sgn(n) != 0) {
            lead = sgn(n);
            break;
        }
    }
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const auto &n : ints) {
        out.emplace_back(Integer(Integer(n / g) * lead));
    }
    return out;
}

} // namespace wallcross

#endif
