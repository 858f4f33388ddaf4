#ifndef EULERBASIS_SEQUENCES_HPP
#define EULERBASIS_SEQUENCES_HPP

#include "polynomial.hpp"
#include "series.hpp"

#include <cstddef>
#include <vector>

namespace eulerbasis {

/// 2 / (e^t + 1) through t^order, the reciprocal of (e^t + 1)/2.
inline TruncatedSeries euler_kernel(std::size_t order)
{
    TruncatedSeries half_sum = exp_series(order);
    half_sum[0] += 1;
    for (std::size_t k = 0; k <= order; ++k)
        half_sum[k] /= 2;
    return series_reciprocal(half_sum);
}

/// t / (e^t - 1) through t^order, the reciprocal of (e^t - 1)/t = sum t^k/(k+1)!.
inline TruncatedSeries bernoulli_kernel(std::size_t order)
{
    const TruncatedSeries e = exp_series(order + 1);
    TruncatedSeries quotient(order);
    for (std::size_t k = 0; k <= order; ++k)
        quotient[k] = e[k + 1];
    return series_reciprocal(quotient);
}

/// n! [t^n] of kernel^power for n = 0..max_n.
inline std::vector<Rational> egf_values(const TruncatedSeries& kernel, unsigned power)
{
    const TruncatedSeries s = series_pow(kernel, power);
    std::vector<Rational> out;
    out.reserve(s.order() + 1);
    for (std::size_t n = 0; n <= s.order(); ++n)
        out.push_back(egf_extract(s, n));
    return out;
}

/// Appell polynomial sum_l C(n,l) a_l x^(n-l) of a number sequence a.
inline Polynomial appell_polynomial(const std::vector<Rational>& numbers, unsigned n)
{
    std::vector<Rational> c(n + 1);
    for (unsigned l = 0; l <= n; ++l)
        c[n - l] = binomial(n, l) * numbers.at(l);
    return Polynomial(std::move(c));
}

/// E_0^{(r)}, ..., E_max_n^{(r)}.
inline std::vector<Rational> euler_numbers_order(unsigned max_n, unsigned r)
{
    return egf_values(euler_kernel(max_n), r);
}

inline Rational euler_number_order(unsigned n, unsigned r)
{
    return euler_numbers_order(n, r)[n];
}

inline Polynomial euler_poly_order(unsigned n, unsigned r)
{
    return appell_polynomial(euler_numbers_order(n, r), n);
}

/// The order-r Euler basis E_0^{(r)}(x), ..., E_max_n^{(r)}(x).
inline std::vector<Polynomial> euler_basis(unsigned max_n, unsigned r)
{
    const auto numbers = euler_numbers_order(max_n, r);
    std::vector<Polynomial> basis;
    basis.reserve(max_n + 1);
    for (unsigned k = 0; k <= max_n; ++k)
        basis.push_back(appell_polynomial(numbers, k));
    return basis;
}

inline Polynomial euler_poly(unsigned n)
{
    return euler_poly_order(n, 1);
}

inline std::vector<Rational> bernoulli_numbers(unsigned max_n)
{
    return egf_values(bernoulli_kernel(max_n), 1);
}

inline Rational bernoulli_number(unsigned n)
{
    return bernoulli_numbers(n)[n];
}

inline Polynomial bernoulli_poly(unsigned n)
{
    return appell_polynomial(bernoulli_numbers(n), n);
}

/// Norlund polynomials: coefficients of (t/(e^t - 1))^s e^{xt}.
inline std::vector<Rational> bernoulli_numbers_order(unsigned max_n, unsigned s)
{
    return egf_values(bernoulli_kernel(max_n), s);
}

inline Polynomial bernoulli_poly_order(unsigned n, unsigned s)
{
    return appell_polynomial(bernoulli_numbers_order(n, s), n);
}

namespace detail {

// Classical Euler numbers from E_n(1) + E_n(0) = 2 * 0^n, which gives
// 2 E_n + sum_{k<n} C(n,k) E_k = 0 for n >= 1. Kept apart from the series
// path so the multinomial form below is an independent computation.
inline std::vector<Rational> euler_numbers_by_recurrence(unsigned max_n)
{
    std::vector<Rational> e(max_n + 1);
    e[0] = 1;
    for (unsigned n = 1; n <= max_n; ++n) {
        Rational acc(0);
        for (unsigned k = 0; k < n; ++k)
            acc += binomial(n, k) * e[k];
        e[n] = -acc / 2;
    }
    return e;
}

} // namespace detail

/// E_n^{(r)}(x) as the sum over n_1 + ... + n_{r+1} = n of
/// multinomial(n; n_1..n_{r+1}) E_{n_1} ... E_{n_r} x^{n_{r+1}}.
inline Polynomial euler_poly_multinomial(unsigned n, unsigned r)
{
    const auto e = detail::euler_numbers_by_recurrence(n);
    std::vector<Rational> coeffs(n + 1, Rational(0));
    std::vector<unsigned> parts(r + 1, 0);

    // Depth-first walk over the first r parts; the last part takes the rest.
    auto walk = [&](auto&& self, unsigned slot, unsigned remaining, const Rational& product) -> void {
        if (slot == r) {
            parts[r] = remaining;
            coeffs[remaining] += multinomial(n, parts) * product;
            return;
        }
        for (unsigned v = 0; v <= remaining; ++v) {
            if (e[v] == 0)
                continue;
            parts[slot] = v;
            self(self, slot + 1, remaining - v, product * e[v]);
        }
        parts[slot] = 0;
    };
    walk(walk, 0, n, Rational(1));
    return Polynomial(std::move(coeffs));
}

enum class Family { euler_order, bernoulli_order, monomial };

/// A member of one of the polynomial families; order is ignored for monomials.
struct FamilySpec {
    Family family = Family::monomial;
    unsigned order = 0;
    unsigned degree = 0;
};

inline Polynomial family_polynomial(const FamilySpec& spec)
{
    switch (spec.family) {
    case Family::euler_order:
        return euler_poly_order(spec.degree, spec.order);
    case Family::bernoulli_order:
        return bernoulli_poly_order(spec.degree, spec.order);
    case Family::monomial:
        break;
    }
    return Polynomial::monomial(spec.degree);
}

} // namespace eulerbasis

#endif
