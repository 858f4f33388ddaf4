#include <eulerbasis/euler_basis.hpp>
#include <eulerbasis/poly_io.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

#include <random>

using namespace eulerbasis;

namespace {

Rational q(long n, long d = 1)
{
    return make_rational(Integer(n), Integer(d));
}

std::vector<Rational> V(std::initializer_list<Rational> v)
{
    return v;
}

} // namespace

TEST(EulerExpansion, TrimsTrailingZeros)
{
    const EulerExpansion e(2, {q(1), q(0), q(0)});
    EXPECT_EQ(e.coeffs(), V({q(1)}));
    EXPECT_EQ(e.coeff(5), 0);
    EXPECT_TRUE(EulerExpansion(3, {q(0)}).coeffs().empty());
}

TEST(ExpandTheorem1, Examples)
{
    for (unsigned r = 0; r <= 4; ++r)
        for (unsigned k = 0; k <= 6; ++k) {
            std::vector<Rational> unit(k + 1, q(0));
            unit[k] = 1;
            EXPECT_EQ(expand_theorem1(euler_poly_order(k, r), r).coeffs(), unit);
        }
    EXPECT_EQ(expand_theorem1(Polynomial::x(), 1).coeffs(), V({q(1, 2), q(1)}));
    EXPECT_EQ(expand_theorem1(Polynomial::monomial(2), 1).coeffs(), V({q(1, 2), q(1), q(1)}));
    EXPECT_TRUE(expand_theorem1(Polynomial(), 3).coeffs().empty());
    EXPECT_EQ(expand_theorem1(Polynomial(), 3).order(), 3u);
}

TEST(ExpandViaDelta, Examples)
{
    EXPECT_EQ(expand_via_delta(Polynomial::x(), 1).coeffs(), V({q(1, 2), q(1)}));
    for (unsigned r = 0; r <= 5; ++r)
        EXPECT_EQ(expand_via_delta(Polynomial::constant(q(-7, 3)), r).coeffs(), V({q(-7, 3)}));
    // Delta~^2 x^2 = 4x^2 + 8x + 6, divided by 4; check: 3/2 + 2(x - 1) + (x^2 - 2x + 1/2) = x^2.
    EXPECT_EQ(expand_via_delta(Polynomial::monomial(2), 2).coeffs(), V({q(3, 2), q(2), q(1)}));
    EXPECT_EQ(expand_via_delta(Polynomial::monomial(2), 1).coeffs(), V({q(1, 2), q(1), q(1)}));
}

TEST(Synthesize, Examples)
{
    EXPECT_EQ(synthesize(EulerExpansion(1, {q(1, 2), q(1)})), Polynomial::x());
    for (unsigned r = 0; r <= 4; ++r)
        EXPECT_EQ(synthesize(EulerExpansion(r, {q(9, 4)})), Polynomial::constant(q(9, 4)));
    EXPECT_EQ(synthesize(EulerExpansion(1, {q(1, 2), q(1), q(1)})), Polynomial::monomial(2));
    EXPECT_TRUE(synthesize(EulerExpansion(2, {})).is_zero());
}

TEST(MonomialExpansion, Examples)
{
    for (unsigned n = 0; n <= 6; ++n) {
        std::vector<Rational> unit(n + 1, q(0));
        unit[n] = 1;
        EXPECT_EQ(monomial_expansion(n, 0).coeffs(), unit);
    }
    EXPECT_EQ(monomial_expansion(1, 1).coeffs(), V({q(1, 2), q(1)}));
    EXPECT_EQ(monomial_expansion(2, 1).coeffs(), V({q(1, 2), q(1), q(1)}));
}

TEST(MonomialExpansion, MatchesTheorem1)
{
    for (unsigned n = 0; n <= 20; ++n)
        for (unsigned r = 0; r <= 6; ++r)
            EXPECT_EQ(monomial_expansion(n, r), expand_theorem1(Polynomial::monomial(n), r)) << n << "," << r;
}

TEST(BernoulliOrderExpansion, Examples)
{
    for (unsigned n = 0; n <= 6; ++n)
        for (unsigned r = 0; r <= 3; ++r)
            EXPECT_EQ(bernoulli_order_expansion(n, 0, r), monomial_expansion(n, r));
    EXPECT_EQ(bernoulli_order_expansion(1, 1, 1).coeffs(), V({q(0), q(1)}));
    EXPECT_EQ(synthesize(bernoulli_order_expansion(2, 1, 1)), parse_polynomial("x^2 - x + 1/6"));
}

TEST(BernoulliOrderExpansion, MatchesTheorem1)
{
    for (unsigned n = 0; n <= 15; ++n)
        for (unsigned s = 0; s <= 4; ++s)
            for (unsigned r = 0; r <= 4; ++r)
                ASSERT_EQ(bernoulli_order_expansion(n, s, r), expand_theorem1(bernoulli_poly_order(n, s), r))
                    << n << "," << s << "," << r;
}

TEST(ExpandTheorem1, RoundTripAndPathAgreement)
{
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 120; ++i) {
        const Polynomial p = oracle::random_polynomial(rng, 15, 10000);
        for (unsigned r = 0; r <= 5; ++r) {
            const EulerExpansion e = expand_theorem1(p, r);
            ASSERT_EQ(synthesize(e), p);
            ASSERT_EQ(e, expand_via_delta(p, r));
            ASSERT_EQ(e.coeffs(), oracle::trimmed(oracle::expansion_by_elimination(p, r)));
            if (!p.is_zero()) {
                ASSERT_EQ(e.coeffs().size(), p.size());
                ASSERT_EQ(e.coeffs().back(), p.leading());
            }
        }
    }
}

TEST(ExpandTheorem1, BasisGivesIdentityMatrix)
{
    constexpr unsigned n = 10;
    for (unsigned r = 0; r <= 5; ++r) {
        const auto basis = euler_basis(n, r);
        for (unsigned k = 0; k <= n; ++k) {
            const auto e = expand_theorem1(basis[k], r);
            for (unsigned i = 0; i <= n; ++i)
                ASSERT_EQ(e.coeff(i), i == k ? 1 : 0);
        }
    }
}
