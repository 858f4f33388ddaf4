#ifndef EULERBASIS_RATIONAL_HPP
#define EULERBASIS_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eulerbasis {

/// Exact rational scalar. GMP keeps every arithmetic result in lowest terms
/// with a positive denominator; values built from raw parts go through
/// make_rational so the same holds for them.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_canonical(const Rational& q)
{
    const Integer& den = q.get_den();
    if (den < 1)
        return false;
    Integer g;
    mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), den.get_mpz_t());
    return g == 1 || (q.get_num() == 0 && den == 1);
}

/// Short canonical text: "3", "-1/2".
inline std::string to_string(const Rational& q)
{
    return q.get_str();
}

/// Always "num/den", integers included ("3/1").
inline std::string to_fraction_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "a", "-a", "a/b" with b > 0. Used by the JSON readers.
inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto bad = [&] { return std::invalid_argument("malformed rational: \"" + s + "\""); };
    if (s.empty())
        throw bad();
    const auto slash = s.find('/');
    const std::string num_part = s.substr(0, slash);
    const std::string den_part = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto digits = [](const std::string& t, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !t.empty() && t[0] == '-')
            i = 1;
        if (i == t.size())
            return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                return false;
        return true;
    };
    if (!digits(num_part, true) || !digits(den_part, false))
        throw bad();
    Integer num(num_part, 10);
    Integer den(den_part, 10);
    if (den == 0)
        throw std::domain_error("rational with zero denominator: \"" + s + "\"");
    return make_rational(num, den);
}

/// base^e with the convention 0^0 = 1.
inline Rational power(const Rational& base, unsigned e)
{
    Rational out(1);
    Rational b(base);
    while (e != 0) {
        if (e & 1u)
            out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

inline Integer factorial(unsigned n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

/// C(n, k), zero when k > n.
inline Rational binomial(unsigned n, unsigned k)
{
    if (k > n)
        return Rational(0);
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return Rational(c);
}

/// n! / (parts[0]! ... parts[m-1]!), requiring the parts to sum to n.
inline Rational multinomial(unsigned n, std::span<const unsigned> parts)
{
    const unsigned long total = std::accumulate(parts.begin(), parts.end(), 0ul);
    if (total != n)
        throw std::invalid_argument("multinomial: parts sum to " + std::to_string(total) +
                                    ", expected " + std::to_string(n));
    Integer value = factorial(n);
    for (unsigned p : parts)
        value /= factorial(p);
    return Rational(value);
}

/// n! / (n-k)!, zero when k > n.
inline Rational falling_factorial(unsigned n, unsigned k)
{
    if (k > n)
        return Rational(0);
    Integer value(1);
    for (unsigned i = 0; i < k; ++i)
        value *= n - i;
    return Rational(value);
}

} // namespace eulerbasis

#endif
