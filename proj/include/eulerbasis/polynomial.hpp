#ifndef EULERBASIS_POLYNOMIAL_HPP
#define EULERBASIS_POLYNOMIAL_HPP

#include "rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace eulerbasis {

/// Dense univariate polynomial in x over a field T, ascending coefficients.
/// The stored vector never ends in a zero, so the zero polynomial is empty
/// and degree() is always well defined for nonzero values.
template <class T>
class BasicPolynomial {
public:
    using value_type = T;

    BasicPolynomial() = default;

    explicit BasicPolynomial(std::vector<T> coeffs)
        : coeffs_(std::move(coeffs))
    {
        trim();
    }

    BasicPolynomial(std::initializer_list<T> coeffs)
        : coeffs_(coeffs)
    {
        trim();
    }

    static BasicPolynomial constant(const T& c) { return BasicPolynomial(std::vector<T>{c}); }

    /// c * x^n
    static BasicPolynomial monomial(std::size_t n, const T& c = T(1))
    {
        std::vector<T> v(n + 1, T(0));
        v[n] = c;
        return BasicPolynomial(std::move(v));
    }

    static BasicPolynomial x() { return monomial(1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    std::size_t size() const noexcept { return coeffs_.size(); }

    /// Coefficient of x^i; zero past the degree.
    T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }

    const T& leading() const
    {
        if (coeffs_.empty())
            throw std::domain_error("leading coefficient of the zero polynomial");
        return coeffs_.back();
    }

    std::span<const T> coeffs() const noexcept { return coeffs_; }

    BasicPolynomial& operator+=(const BasicPolynomial& rhs)
    {
        if (rhs.coeffs_.size() > coeffs_.size())
            coeffs_.resize(rhs.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
            coeffs_[i] += rhs.coeffs_[i];
        trim();
        return *this;
    }

    BasicPolynomial& operator-=(const BasicPolynomial& rhs)
    {
        if (rhs.coeffs_.size() > coeffs_.size())
            coeffs_.resize(rhs.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
            coeffs_[i] -= rhs.coeffs_[i];
        trim();
        return *this;
    }

    BasicPolynomial& operator*=(const T& c)
    {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& a : coeffs_)
            a *= c;
        return *this;
    }

    BasicPolynomial& operator/=(const T& c)
    {
        if (c == 0)
            throw std::domain_error("polynomial divided by zero");
        for (auto& a : coeffs_)
            a /= c;
        return *this;
    }

    /// Adds c * x^i in place.
    void add_term(std::size_t i, const T& c)
    {
        if (c == 0)
            return;
        if (i >= coeffs_.size())
            coeffs_.resize(i + 1, T(0));
        coeffs_[i] += c;
        trim();
    }

    friend BasicPolynomial operator+(BasicPolynomial lhs, const BasicPolynomial& rhs) { return lhs += rhs; }
    friend BasicPolynomial operator-(BasicPolynomial lhs, const BasicPolynomial& rhs) { return lhs -= rhs; }
    friend BasicPolynomial operator*(BasicPolynomial p, const T& c) { return p *= c; }
    friend BasicPolynomial operator*(const T& c, BasicPolynomial p) { return p *= c; }
    friend BasicPolynomial operator/(BasicPolynomial p, const T& c) { return p /= c; }

    friend BasicPolynomial operator-(BasicPolynomial p)
    {
        for (auto& a : p.coeffs_)
            a = -a;
        return p;
    }

    friend BasicPolynomial operator*(const BasicPolynomial& p, const BasicPolynomial& q)
    {
        if (p.is_zero() || q.is_zero())
            return {};
        std::vector<T> out(p.coeffs_.size() + q.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
                out[i + j] += p.coeffs_[i] * q.coeffs_[j];
        return BasicPolynomial(std::move(out));
    }

    friend bool operator==(const BasicPolynomial& p, const BasicPolynomial& q) { return p.coeffs_ == q.coeffs_; }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using Polynomial = BasicPolynomial<Rational>;

template <class T>
BasicPolynomial<T> poly_mul(const BasicPolynomial<T>& p, const BasicPolynomial<T>& q)
{
    return p * q;
}

/// p(x + a), expanded as sum_i c_i sum_j C(i,j) a^(i-j) x^j.
template <class T>
BasicPolynomial<T> poly_shift(const BasicPolynomial<T>& p, const T& a)
{
    if (p.is_zero() || a == 0)
        return p;
    const std::size_t n = p.size();
    std::vector<T> out(n, T(0));
    // Pascal row C(i, .) and powers a^0..a^(n-1), built incrementally.
    std::vector<T> pascal{T(1)};
    std::vector<T> apow(n, T(1));
    for (std::size_t k = 1; k < n; ++k)
        apow[k] = apow[k - 1] * a;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) {
            std::vector<T> next(i + 1, T(1));
            for (std::size_t j = 1; j < i; ++j)
                next[j] = pascal[j - 1] + pascal[j];
            pascal = std::move(next);
        }
        const T& c = p.coeffs()[i];
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= i; ++j)
            out[j] += c * pascal[j] * apow[i - j];
    }
    return BasicPolynomial<T>(std::move(out));
}

template <class T>
BasicPolynomial<T> poly_derivative(const BasicPolynomial<T>& p)
{
    if (p.size() <= 1)
        return {};
    std::vector<T> out(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i)
        out[i - 1] = p.coeffs()[i] * T(static_cast<unsigned long>(i));
    return BasicPolynomial<T>(std::move(out));
}

/// Horner evaluation.
template <class T>
T poly_eval(const BasicPolynomial<T>& p, const T& a)
{
    T acc(0);
    const auto c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;)
        acc = acc * a + c[i];
    return acc;
}

} // namespace eulerbasis

#endif
