#ifndef EULERBASIS_OPERATORS_HPP
#define EULERBASIS_OPERATORS_HPP

#include "polynomial.hpp"

namespace eulerbasis {

/// f(x) -> f(x+1) + f(x)
template <class T>
BasicPolynomial<T> delta_tilde(const BasicPolynomial<T>& p)
{
    return poly_shift(p, T(1)) + p;
}

/// (S + I)^r p = sum_j C(r,j) p(x + j), S the unit shift.
inline Polynomial delta_tilde_pow(const Polynomial& p, unsigned r)
{
    if (r == 0 || p.is_zero())
        return p;
    Polynomial out;
    for (unsigned j = 0; j <= r; ++j)
        out += binomial(r, j) * poly_shift(p, Rational(j));
    return out;
}

/// k-th derivative.
template <class T>
BasicPolynomial<T> d_pow(BasicPolynomial<T> p, unsigned k)
{
    for (unsigned i = 0; i < k && !p.is_zero(); ++i)
        p = poly_derivative(p);
    return p;
}

} // namespace eulerbasis

#endif
