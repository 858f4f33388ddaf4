#ifndef EULERBASIS_SERIES_HPP
#define EULERBASIS_SERIES_HPP

#include "rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eulerbasis {

/// Formal power series in t truncated after t^order; always holds exactly
/// order + 1 coefficients.
template <class T>
class BasicTruncatedSeries {
public:
    explicit BasicTruncatedSeries(std::size_t order)
        : coeffs_(order + 1, T(0))
    {
    }

    BasicTruncatedSeries(std::vector<T> coeffs, std::size_t order)
        : coeffs_(std::move(coeffs))
    {
        coeffs_.resize(order + 1, T(0));
    }

    /// The series 1.
    static BasicTruncatedSeries one(std::size_t order)
    {
        BasicTruncatedSeries s(order);
        s.coeffs_[0] = T(1);
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const T& operator[](std::size_t k) const { return coeffs_.at(k); }
    T& operator[](std::size_t k) { return coeffs_.at(k); }
    const std::vector<T>& coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const BasicTruncatedSeries&, const BasicTruncatedSeries&) = default;

private:
    std::vector<T> coeffs_;
};

using TruncatedSeries = BasicTruncatedSeries<Rational>;

template <class T>
BasicTruncatedSeries<T> series_mul(const BasicTruncatedSeries<T>& a, const BasicTruncatedSeries<T>& b)
{
    if (a.order() != b.order())
        throw std::invalid_argument("series_mul: truncation orders differ (" + std::to_string(a.order()) +
                                    " vs " + std::to_string(b.order()) + ")");
    const std::size_t n = a.order();
    BasicTruncatedSeries<T> c(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; i + j <= n; ++j)
            c[i + j] += a[i] * b[j];
    }
    return c;
}

/// b_0 = 1/a_0, b_k = -(1/a_0) sum_{i=1..k} a_i b_{k-i}.
template <class T>
BasicTruncatedSeries<T> series_reciprocal(const BasicTruncatedSeries<T>& a)
{
    if (a[0] == 0)
        throw std::domain_error("series_reciprocal: constant term is zero, series is not invertible");
    const std::size_t n = a.order();
    BasicTruncatedSeries<T> b(n);
    const T inv = T(1) / a[0];
    b[0] = inv;
    for (std::size_t k = 1; k <= n; ++k) {
        T acc(0);
        for (std::size_t i = 1; i <= k; ++i)
            acc += a[i] * b[k - i];
        b[k] = -inv * acc;
    }
    return b;
}

/// r-fold product by binary powering; exponent 0 yields the series 1.
template <class T>
BasicTruncatedSeries<T> series_pow(const BasicTruncatedSeries<T>& a, unsigned r)
{
    auto out = BasicTruncatedSeries<T>::one(a.order());
    auto base = a;
    while (r != 0) {
        if (r & 1u)
            out = series_mul(out, base);
        r >>= 1;
        if (r != 0)
            base = series_mul(base, base);
    }
    return out;
}

/// sum_k t^k / k!
inline TruncatedSeries exp_series(std::size_t order)
{
    TruncatedSeries s(order);
    Rational term(1);
    for (std::size_t k = 0; k <= order; ++k) {
        if (k > 0)
            term /= static_cast<unsigned long>(k);
        s[k] = term;
    }
    return s;
}

/// e^{xt} = sum_k x^k t^k / k!
inline TruncatedSeries scaled_exp_series(const Rational& x, std::size_t order)
{
    TruncatedSeries s(order);
    Rational term(1);
    for (std::size_t k = 0; k <= order; ++k) {
        if (k > 0)
            term = term * x / static_cast<unsigned long>(k);
        s[k] = term;
    }
    return s;
}

/// n! * a_n, the n-th value of the sequence whose EGF is a.
inline Rational egf_extract(const TruncatedSeries& a, std::size_t n)
{
    if (n > a.order())
        throw std::out_of_range("egf_extract: index " + std::to_string(n) + " beyond truncation order " +
                                std::to_string(a.order()));
    return a[n] * Rational(factorial(static_cast<unsigned>(n)));
}

} // namespace eulerbasis

#endif
