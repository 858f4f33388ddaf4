#ifndef EULERBASIS_IDENTITIES_HPP
#define EULERBASIS_IDENTITIES_HPP

#include "euler_basis.hpp"
#include "operators.hpp"
#include "poly_io.hpp"
#include "sequences.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

namespace eulerbasis {

enum class IdentityId { cor2, cor3, eq17, thm4, eq19, thm5, eq20, thm6_printed, thm6_corrected };

inline constexpr IdentityId all_identities[] = {
    IdentityId::cor2,  IdentityId::cor3, IdentityId::eq17,         IdentityId::thm4,          IdentityId::eq19,
    IdentityId::thm5,  IdentityId::eq20, IdentityId::thm6_printed, IdentityId::thm6_corrected,
};

inline std::string_view identity_name(IdentityId id)
{
    switch (id) {
    case IdentityId::cor2: return "cor2";
    case IdentityId::cor3: return "cor3";
    case IdentityId::eq17: return "eq17";
    case IdentityId::thm4: return "thm4";
    case IdentityId::eq19: return "eq19";
    case IdentityId::thm5: return "thm5";
    case IdentityId::eq20: return "eq20";
    case IdentityId::thm6_printed: return "thm6-printed";
    case IdentityId::thm6_corrected: return "thm6-corrected";
    }
    return "?";
}

inline std::optional<IdentityId> identity_from_name(std::string_view name)
{
    for (IdentityId id : all_identities)
        if (identity_name(id) == name)
            return id;
    return std::nullopt;
}

/// True for the literal-as-typeset audit modes, whose failures are findings
/// rather than verification failures.
inline bool is_audit_identity(IdentityId id)
{
    return id == IdentityId::thm6_printed;
}

using Params = std::vector<std::pair<std::string, long>>;

/// Outcome of checking one identity instance. pass is true exactly when
/// discrepancy (= lhs - rhs) is the zero polynomial.
struct IdentityReport {
    IdentityId id = IdentityId::cor2;
    Params params;
    Polynomial lhs;
    Polynomial rhs;
    Polynomial discrepancy;
    bool pass = false;
    /// For identities whose right side is an Euler-basis expansion: whether
    /// its coordinates equal expand_theorem1(lhs, r).
    std::optional<bool> oracle_agrees;
    std::string note;

    friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

inline IdentityReport make_report(IdentityId id, Params params, Polynomial lhs, Polynomial rhs)
{
    IdentityReport rep;
    rep.id = id;
    rep.params = std::move(params);
    rep.discrepancy = lhs - rhs;
    rep.pass = rep.discrepancy.is_zero();
    rep.lhs = std::move(lhs);
    rep.rhs = std::move(rhs);
    return rep;
}

namespace detail {

inline void anchor_to_theorem1(IdentityReport& rep, const EulerExpansion& claimed, unsigned r)
{
    const EulerExpansion truth = expand_theorem1(rep.lhs, r);
    rep.oracle_agrees = truth == claimed;
    if (*rep.oracle_agrees)
        return;
    std::string ks;
    const std::size_t len = std::max(truth.coeffs().size(), claimed.coeffs().size());
    for (std::size_t k = 0; k < len; ++k)
        if (truth.coeff(k) != claimed.coeff(k))
            ks += (ks.empty() ? "" : ",") + std::to_string(k);
    rep.note += (rep.note.empty() ? "" : "; ") + std::string("coefficients differ from the direct expansion at k=") + ks;
}

inline std::vector<Polynomial> bernoulli_polys(unsigned max_n)
{
    const auto numbers = bernoulli_numbers(max_n);
    std::vector<Polynomial> out;
    out.reserve(max_n + 1);
    for (unsigned k = 0; k <= max_n; ++k)
        out.push_back(appell_polynomial(numbers, k));
    return out;
}

inline void require_eq20_domain(unsigned n, unsigned m, const char* who)
{
    if (m < 1 || n < m + 2)
        throw std::invalid_argument(std::string(who) + ": requires m >= 1 and n >= m + 2 (got n=" +
                                    std::to_string(n) + ", m=" + std::to_string(m) +
                                    "); at m = 0 the formula reduces to B_n(x) - B_n and is false");
}

// C(m,2l)(n-m) + C(n-m,2l) m
inline Rational eq20_weight(unsigned n, unsigned m, unsigned l)
{
    return binomial(m, 2 * l) * Rational(n - m) + binomial(n - m, 2 * l) * Rational(m);
}

} // namespace detail

/// x^n against its closed-form expansion.
inline IdentityReport check_cor2(unsigned n, unsigned r)
{
    const EulerExpansion e = monomial_expansion(n, r);
    auto rep = make_report(IdentityId::cor2, {{"n", n}, {"r", r}}, Polynomial::monomial(n), synthesize(e));
    detail::anchor_to_theorem1(rep, e, r);
    return rep;
}

/// B_n^{(s)}(x) against its closed-form expansion.
inline IdentityReport check_cor3(unsigned n, unsigned s, unsigned r)
{
    const EulerExpansion e = bernoulli_order_expansion(n, s, r);
    auto rep = make_report(IdentityId::cor3, {{"n", n}, {"s", s}, {"r", r}}, bernoulli_poly_order(n, s), synthesize(e));
    detail::anchor_to_theorem1(rep, e, r);
    return rep;
}

/// sum_{k=0, k != 1}^{n} C(n,k) B_k E_{n-k}(x), as order-1 coordinates.
inline EulerExpansion eq17_expansion(unsigned n)
{
    const auto b = bernoulli_numbers(n);
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for (unsigned k = 0; k <= n; ++k)
        if (k != 1)
            coeffs[n - k] = binomial(n, k) * b[k];
    return EulerExpansion(1, std::move(coeffs));
}

/// B_n(x) = sum_{k != 1} C(n,k) B_k E_{n-k}(x).
inline IdentityReport check_eq17(unsigned n)
{
    const EulerExpansion e = eq17_expansion(n);
    auto rep = make_report(IdentityId::eq17, {{"n", n}}, bernoulli_poly(n), synthesize(e));
    detail::anchor_to_theorem1(rep, e, 1);
    return rep;
}

/// The k != 1 Bernoulli-Euler sum equals the order-r expansion with
/// b_k = (1/2^r) C(n,k) sum_j C(r,j) B_{n-k}(j).
inline IdentityReport check_theorem4(unsigned n, unsigned r)
{
    const auto bp = detail::bernoulli_polys(n);
    const Rational scale = two_pow(r);
    std::vector<Rational> b(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        Rational acc(0);
        for (unsigned j = 0; j <= r; ++j)
            acc += binomial(r, j) * poly_eval(bp[n - k], Rational(j));
        b[k] = binomial(n, k) * acc / scale;
    }
    const EulerExpansion e(r, std::move(b));
    auto rep = make_report(IdentityId::thm4, {{"n", n}, {"r", r}}, synthesize(eq17_expansion(n)), synthesize(e));
    detail::anchor_to_theorem1(rep, e, r);
    return rep;
}

/// sum_{i=0}^{n} B_i(x) B_{n-i}(x)
inline Polynomial bernoulli_self_convolution(unsigned n)
{
    const auto bp = detail::bernoulli_polys(n);
    Polynomial p;
    for (unsigned i = 0; i <= n; ++i)
        p += bp[i] * bp[n - i];
    return p;
}

/// D^k of the self-convolution against (n+1)!/(n-k+1)! sum_{l=k}^{n} B_{l-k}(x) B_{n-l}(x).
inline IdentityReport check_eq19(unsigned n, unsigned k)
{
    if (k > n)
        throw std::invalid_argument("check_eq19: requires k <= n (got n=" + std::to_string(n) +
                                    ", k=" + std::to_string(k) + ")");
    const auto bp = detail::bernoulli_polys(n);
    Polynomial sum;
    for (unsigned l = k; l <= n; ++l)
        sum += bp[l - k] * bp[n - l];
    const Rational factor = falling_factorial(n + 1, k);
    return make_report(IdentityId::eq19, {{"n", n}, {"k", k}}, d_pow(bernoulli_self_convolution(n), k), factor * sum);
}

/// Coordinates of the Bernoulli self-convolution:
/// b_k = (1/2^r) C(n+1,k) sum_{l=k}^{n} sum_j C(r,j) B_{l-k}(j) B_{n-l}(j).
inline EulerExpansion theorem5_expansion(unsigned n, unsigned r)
{
    const auto bp = detail::bernoulli_polys(n);
    // values[i][j] = B_i(j)
    std::vector<std::vector<Rational>> values(n + 1, std::vector<Rational>(r + 1));
    for (unsigned i = 0; i <= n; ++i)
        for (unsigned j = 0; j <= r; ++j)
            values[i][j] = poly_eval(bp[i], Rational(j));
    const Rational scale = two_pow(r);
    std::vector<Rational> b(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        Rational acc(0);
        for (unsigned l = k; l <= n; ++l)
            for (unsigned j = 0; j <= r; ++j)
                acc += binomial(r, j) * values[l - k][j] * values[n - l][j];
        b[k] = binomial(n + 1, k) * acc / scale;
    }
    return EulerExpansion(r, std::move(b));
}

inline IdentityReport check_theorem5(unsigned n, unsigned r)
{
    const EulerExpansion e = theorem5_expansion(n, r);
    auto rep = make_report(IdentityId::thm5, {{"n", n}, {"r", r}}, bernoulli_self_convolution(n), synthesize(e));
    detail::anchor_to_theorem1(rep, e, r);
    return rep;
}

/// Right side of the product formula for B_m(x) B_{n-m}(x), evaluated for
/// any n > m without checking the domain (the m = 0 boundary is instructive):
///   sum_l {C(m,2l)(n-m) + C(n-m,2l) m} B_{2l} B_{n-2l}(x)/(n-2l) + (-1)^(m+1) B_n / C(n,m).
inline Polynomial eq20_rhs(unsigned n, unsigned m)
{
    if (m >= n)
        throw std::invalid_argument("eq20_rhs: requires m < n");
    const auto bp = detail::bernoulli_polys(n);
    const auto bn = bernoulli_numbers(n);
    Polynomial out;
    for (unsigned l = 0; 2 * l < n; ++l) {
        const Rational w = detail::eq20_weight(n, m, l);
        if (w == 0 || bn[2 * l] == 0)
            continue;
        out += (w * bn[2 * l] / Rational(n - 2 * l)) * bp[n - 2 * l];
    }
    const Rational sign = (m % 2 == 1) ? Rational(1) : Rational(-1);
    out += Polynomial::constant(sign * bn[n] / binomial(n, m));
    return out;
}

inline IdentityReport check_eq20(unsigned n, unsigned m)
{
    detail::require_eq20_domain(n, m, "check_eq20");
    return make_report(IdentityId::eq20, {{"n", n}, {"m", m}}, bernoulli_poly(m) * bernoulli_poly(n - m),
                       eq20_rhs(n, m));
}

enum class Theorem6Mode { printed, corrected };

/// Coordinates of B_m(x) B_{n-m}(x) in the order-r Euler basis, product formula:
///   b_k = (1/2^r) sum_{l >= l0} sum_j C(r,j) C(n-2l,k) {weight} B_{2l} B_{n-2l-k}(j)/(n-2l)
/// where l0 = k as typeset and l0 = 0 when corrected; the corrected form also
/// carries (-1)^(m+1) B_n / C(n,m) in b_0. Terms with 2l > max(m, n-m) or
/// n-2l-k < 0 vanish.
inline EulerExpansion theorem6_expansion(unsigned n, unsigned m, unsigned r, Theorem6Mode mode)
{
    detail::require_eq20_domain(n, m, "theorem6_expansion");
    const auto bp = detail::bernoulli_polys(n);
    const auto bn = bernoulli_numbers(n);
    const Rational scale = two_pow(r);
    std::vector<Rational> b(n + 1, Rational(0));
    for (unsigned k = 0; k <= n; ++k) {
        Rational acc(0);
        const unsigned l0 = mode == Theorem6Mode::printed ? k : 0;
        for (unsigned l = l0; 2 * l + k <= n && 2 * l < n; ++l) {
            const Rational w = detail::eq20_weight(n, m, l);
            if (w == 0 || bn[2 * l] == 0)
                continue;
            const Rational c = binomial(n - 2 * l, k) * w * bn[2 * l] / Rational(n - 2 * l);
            for (unsigned j = 0; j <= r; ++j)
                acc += binomial(r, j) * c * poly_eval(bp[n - 2 * l - k], Rational(j));
        }
        b[k] = acc / scale;
    }
    if (mode == Theorem6Mode::corrected) {
        const Rational sign = (m % 2 == 1) ? Rational(1) : Rational(-1);
        b[0] += sign * bn[n] / binomial(n, m);
    }
    return EulerExpansion(r, std::move(b));
}

inline IdentityReport check_theorem6(unsigned n, unsigned m, unsigned r, Theorem6Mode mode)
{
    const EulerExpansion e = theorem6_expansion(n, m, r, mode);
    const IdentityId id = mode == Theorem6Mode::printed ? IdentityId::thm6_printed : IdentityId::thm6_corrected;
    auto rep = make_report(id, {{"n", n}, {"m", m}, {"r", r}}, bernoulli_poly(m) * bernoulli_poly(n - m), synthesize(e));
    if (mode == Theorem6Mode::printed && !rep.pass)
        rep.note = "as typeset: discrepancy " + render_polynomial(rep.discrepancy);
    detail::anchor_to_theorem1(rep, e, r);
    return rep;
}

/// Upper bounds per parameter name ("n", "m", "r", "s", "k"). A missing n,
/// r or s bound means 0; a missing k or m bound leaves only the structural
/// limit (k <= n, m <= n - 2).
using GridBounds = std::map<std::string, unsigned>;

namespace detail {

inline std::optional<unsigned> bound_of(const GridBounds& b, const std::string& key)
{
    const auto it = b.find(key);
    if (it == b.end())
        return std::nullopt;
    return it->second;
}

} // namespace detail

/// One lazily evaluated grid instance.
struct GridTask {
    IdentityId id;
    std::function<IdentityReport()> run;
};

/// Every valid parameter tuple within bounds, grouped by identity and
/// lexicographic in (n, then the remaining parameters in their listed order).
inline std::vector<GridTask> enumerate_grid(const std::set<IdentityId>& ids, const GridBounds& bounds)
{
    const unsigned n_max = detail::bound_of(bounds, "n").value_or(0);
    const unsigned r_max = detail::bound_of(bounds, "r").value_or(0);
    const unsigned s_max = detail::bound_of(bounds, "s").value_or(0);
    const auto m_bound = detail::bound_of(bounds, "m");
    const auto k_bound = detail::bound_of(bounds, "k");

    std::vector<GridTask> tasks;
    for (IdentityId id : ids) {
        for (unsigned n = 0; n <= n_max; ++n) {
            switch (id) {
            case IdentityId::cor2:
                for (unsigned r = 0; r <= r_max; ++r)
                    tasks.push_back({id, [=] { return check_cor2(n, r); }});
                break;
            case IdentityId::cor3:
                for (unsigned s = 0; s <= s_max; ++s)
                    for (unsigned r = 0; r <= r_max; ++r)
                        tasks.push_back({id, [=] { return check_cor3(n, s, r); }});
                break;
            case IdentityId::eq17:
                tasks.push_back({id, [=] { return check_eq17(n); }});
                break;
            case IdentityId::thm4:
                for (unsigned r = 0; r <= r_max; ++r)
                    tasks.push_back({id, [=] { return check_theorem4(n, r); }});
                break;
            case IdentityId::eq19: {
                const unsigned k_top = std::min(n, k_bound.value_or(n));
                for (unsigned k = 0; k <= k_top; ++k)
                    tasks.push_back({id, [=] { return check_eq19(n, k); }});
                break;
            }
            case IdentityId::thm5:
                for (unsigned r = 0; r <= r_max; ++r)
                    tasks.push_back({id, [=] { return check_theorem5(n, r); }});
                break;
            case IdentityId::eq20:
            case IdentityId::thm6_printed:
            case IdentityId::thm6_corrected: {
                if (n < 3)
                    break;
                const unsigned m_top = std::min(n - 2, m_bound.value_or(n - 2));
                for (unsigned m = 1; m <= m_top; ++m) {
                    if (id == IdentityId::eq20) {
                        tasks.push_back({id, [=] { return check_eq20(n, m); }});
                        continue;
                    }
                    const auto mode =
                        id == IdentityId::thm6_printed ? Theorem6Mode::printed : Theorem6Mode::corrected;
                    for (unsigned r = 0; r <= r_max; ++r)
                        tasks.push_back({id, [=] { return check_theorem6(n, m, r, mode); }});
                }
                break;
            }
            }
        }
    }
    return tasks;
}

/// Evaluates the grid, optionally on several threads. The output order is
/// the enumeration order whatever the thread count.
inline std::vector<IdentityReport> run_grid(const std::set<IdentityId>& ids, const GridBounds& bounds,
                                            unsigned threads = 1)
{
    const auto tasks = enumerate_grid(ids, bounds);
    std::vector<IdentityReport> out(tasks.size());
    if (threads <= 1 || tasks.size() < 2) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            out[i] = tasks[i].run();
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();)
                    out[i] = tasks[i].run();
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool)
        th.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

} // namespace eulerbasis

#endif
