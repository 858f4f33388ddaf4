#ifndef EULERBASIS_EULER_BASIS_HPP
#define EULERBASIS_EULER_BASIS_HPP

#include "operators.hpp"
#include "polynomial.hpp"
#include "sequences.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace eulerbasis {

/// Coordinates b_0..b_n of a polynomial in the basis E_0^{(r)}(x), ..., E_n^{(r)}(x).
/// Trailing zero coordinates are dropped, so the last stored coordinate is
/// nonzero exactly when the represented polynomial has that degree.
class EulerExpansion {
public:
    EulerExpansion() = default;

    EulerExpansion(unsigned order, std::vector<Rational> coeffs)
        : order_(order)
        , coeffs_(std::move(coeffs))
    {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    unsigned order() const noexcept { return order_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

    friend bool operator==(const EulerExpansion&, const EulerExpansion&) = default;

private:
    unsigned order_ = 0;
    std::vector<Rational> coeffs_;
};

/// 2^r as a rational.
inline Rational two_pow(unsigned r)
{
    return power(Rational(2), r);
}

/// b_k = 1/(2^r k!) * sum_{j=0..r} C(r,j) (D^k p)(j).
inline EulerExpansion expand_theorem1(const Polynomial& p, unsigned r)
{
    if (p.is_zero())
        return EulerExpansion(r, {});
    const auto n = static_cast<unsigned>(p.degree());
    const Rational scale = two_pow(r);
    std::vector<Rational> b(n + 1);
    Polynomial dk = p;
    for (unsigned k = 0; k <= n; ++k) {
        if (k > 0)
            dk = poly_derivative(dk);
        Rational acc(0);
        for (unsigned j = 0; j <= r; ++j)
            acc += binomial(r, j) * poly_eval(dk, Rational(j));
        b[k] = acc / (scale * Rational(factorial(k)));
    }
    return EulerExpansion(r, std::move(b));
}

/// Reads b_k off Delta~^r p = 2^r sum_k b_k x^k.
inline EulerExpansion expand_via_delta(const Polynomial& p, unsigned r)
{
    const Polynomial q = delta_tilde_pow(p, r);
    const Rational scale = two_pow(r);
    std::vector<Rational> b(q.coeffs().begin(), q.coeffs().end());
    for (auto& c : b)
        c /= scale;
    return EulerExpansion(r, std::move(b));
}

/// sum_k b_k E_k^{(r)}(x)
inline Polynomial synthesize(const EulerExpansion& e)
{
    if (e.coeffs().empty())
        return {};
    const auto basis = euler_basis(static_cast<unsigned>(e.coeffs().size() - 1), e.order());
    Polynomial out;
    for (std::size_t k = 0; k < e.coeffs().size(); ++k)
        if (e.coeffs()[k] != 0)
            out += e.coeffs()[k] * basis[k];
    return out;
}

/// x^n: b_k = (1/2^r) C(n,k) sum_j C(r,j) j^(n-k), with 0^0 = 1.
inline EulerExpansion monomial_expansion(unsigned n, unsigned r)
{
    const Rational scale = two_pow(r);
    std::vector<Rational> b(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        Rational acc(0);
        for (unsigned j = 0; j <= r; ++j)
            acc += binomial(r, j) * power(Rational(j), n - k);
        b[k] = binomial(n, k) * acc / scale;
    }
    return EulerExpansion(r, std::move(b));
}

/// B_n^{(s)}(x): b_k = (1/2^r) C(n,k) sum_j C(r,j) B_{n-k}^{(s)}(j).
inline EulerExpansion bernoulli_order_expansion(unsigned n, unsigned s, unsigned r)
{
    const auto numbers = bernoulli_numbers_order(n, s);
    const Rational scale = two_pow(r);
    std::vector<Rational> b(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        const Polynomial bp = appell_polynomial(numbers, n - k);
        Rational acc(0);
        for (unsigned j = 0; j <= r; ++j)
            acc += binomial(r, j) * poly_eval(bp, Rational(j));
        b[k] = binomial(n, k) * acc / scale;
    }
    return EulerExpansion(r, std::move(b));
}

} // namespace eulerbasis

#endif
