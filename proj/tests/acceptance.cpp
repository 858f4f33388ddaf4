// Acceptance suite: one PASS/FAIL line per criterion. All checks are exact
// (zero-polynomial or coefficientwise equality); the only thresholds are
// wall-clock budgets.

#include "cli_app.hpp"
#include "oracles.hpp"

#include <eulerbasis/eulerbasis.hpp>
#include <eulerbasis/json_io.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace eulerbasis;

namespace {

using Clock = std::chrono::steady_clock;

constexpr double corpus_budget_seconds = 30.0;
constexpr double suite_budget_seconds = 120.0;
constexpr unsigned corpus_size = 300;
constexpr unsigned corpus_max_degree = 15;
constexpr long corpus_coeff_bound = 10000;
constexpr unsigned corpus_max_order = 5;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

Rational q(long n, long d = 1)
{
    return make_rational(Integer(n), Integer(d));
}

bool all_pass(const std::vector<IdentityReport>& reps, std::string& first_failure)
{
    for (const auto& rep : reps) {
        if (!rep.pass || rep.oracle_agrees == false) {
            std::ostringstream ss;
            ss << identity_name(rep.id);
            for (const auto& [k, v] : rep.params)
                ss << " " << k << "=" << v;
            ss << " discrepancy " << render_polynomial(rep.discrepancy) << " " << rep.note;
            first_failure = ss.str();
            return false;
        }
    }
    return true;
}

std::vector<Polynomial> make_corpus()
{
    std::mt19937_64 rng(0x5eed2026);
    std::vector<Polynomial> corpus;
    corpus.reserve(corpus_size);
    for (unsigned i = 0; i < corpus_size; ++i)
        corpus.push_back(oracle::random_polynomial(rng, corpus_max_degree, corpus_coeff_bound));
    return corpus;
}

std::string read_file(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CliRun {
    int code;
    std::string out;
};

CliRun cli_run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str()};
}

} // namespace

int main()
{
    const auto suite_start = Clock::now();
    const auto corpus = make_corpus();
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;

    criteria.emplace_back("AC1 expansion round-trip on 300 random polynomials, r<=5, under 30 s", [&] {
        Outcome o;
        const auto start = Clock::now();
        for (std::size_t i = 0; i < corpus.size() && o.ok; ++i)
            for (unsigned r = 0; r <= corpus_max_order; ++r)
                o.require(synthesize(expand_theorem1(corpus[i], r)) == corpus[i],
                          "round-trip failed for corpus[" + std::to_string(i) + "] r=" + std::to_string(r));
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        o.require(secs < corpus_budget_seconds, "took " + std::to_string(secs) + " s");
        if (o.ok)
            o.detail = std::to_string(secs) + " s";
        return o;
    });

    criteria.emplace_back("AC2 derivative-node and Delta~ expansion paths agree on the same corpus", [&] {
        Outcome o;
        for (std::size_t i = 0; i < corpus.size() && o.ok; ++i)
            for (unsigned r = 0; r <= corpus_max_order; ++r)
                o.require(expand_theorem1(corpus[i], r) == expand_via_delta(corpus[i], r),
                          "paths disagree for corpus[" + std::to_string(i) + "] r=" + std::to_string(r));
        return o;
    });

    criteria.emplace_back("AC3 monicity, Appell derivative, Delta~ recurrence (n<=20, r<=6); commutation on 200 polys", [&] {
        Outcome o;
        for (unsigned r = 0; r <= 6; ++r) {
            const auto basis = euler_basis(20, r);
            const auto lower = r > 0 ? euler_basis(20, r - 1) : basis;
            for (unsigned n = 0; n <= 20; ++n) {
                const std::string at = " n=" + std::to_string(n) + " r=" + std::to_string(r);
                o.require(basis[n].degree() == static_cast<long>(n) && basis[n].leading() == 1, "not monic" + at);
                if (n > 0)
                    o.require(poly_derivative(basis[n]) == Rational(n) * basis[n - 1], "derivative" + at);
                if (r > 0)
                    o.require(delta_tilde(basis[n]) == Rational(2) * lower[n], "recurrence" + at);
            }
        }
        std::mt19937_64 rng(424242);
        for (int i = 0; i < 200; ++i) {
            const Polynomial p = oracle::random_polynomial(rng, corpus_max_degree, corpus_coeff_bound);
            o.require(delta_tilde(poly_derivative(p)) == poly_derivative(delta_tilde(p)), "commutation");
        }
        return o;
    });

    criteria.emplace_back("AC4 binomial and multinomial forms agree (n<=12, r<=4)", [] {
        Outcome o;
        for (unsigned n = 0; n <= 12; ++n)
            for (unsigned r = 0; r <= 4; ++r)
                o.require(euler_poly_order(n, r) == euler_poly_multinomial(n, r),
                          "n=" + std::to_string(n) + " r=" + std::to_string(r));
        return o;
    });

    criteria.emplace_back("AC5 monomial closed form equals direct expansion (n<=20, r<=6) + spot values", [] {
        Outcome o;
        for (unsigned n = 0; n <= 20; ++n)
            for (unsigned r = 0; r <= 6; ++r)
                o.require(monomial_expansion(n, r) == expand_theorem1(Polynomial::monomial(n), r),
                          "n=" + std::to_string(n) + " r=" + std::to_string(r));
        o.require(monomial_expansion(1, 1).coeffs() == std::vector<Rational>{q(1, 2), q(1)}, "spot (1,1)");
        o.require(monomial_expansion(2, 1).coeffs() == std::vector<Rational>{q(1, 2), q(1), q(1)}, "spot (2,1)");
        std::string why;
        o.require(all_pass(run_grid({IdentityId::cor2}, {{"n", 20}, {"r", 6}}), why), why);
        return o;
    });

    criteria.emplace_back("AC6 higher-order Bernoulli closed form equals direct expansion (n<=15, s<=4, r<=4)", [] {
        Outcome o;
        for (unsigned n = 0; n <= 15; ++n)
            for (unsigned s = 0; s <= 4; ++s)
                for (unsigned r = 0; r <= 4; ++r)
                    o.require(bernoulli_order_expansion(n, s, r) == expand_theorem1(bernoulli_poly_order(n, s), r),
                              "n=" + std::to_string(n) + " s=" + std::to_string(s) + " r=" + std::to_string(r));
        std::string why;
        o.require(all_pass(run_grid({IdentityId::cor3}, {{"n", 15}, {"s", 4}, {"r", 4}}), why), why);
        return o;
    });

    criteria.emplace_back("AC7 Bernoulli-in-Euler sum (n<=20) and its order-r expansion (n<=15, r<=5)", [] {
        Outcome o;
        std::string why;
        o.require(all_pass(run_grid({IdentityId::eq17}, {{"n", 20}}), why), why);
        o.require(all_pass(run_grid({IdentityId::thm4}, {{"n", 15}, {"r", 5}}), why), why);
        return o;
    });

    criteria.emplace_back("AC8 self-convolution derivative (n<=12, k<=n) and expansion (n<=12, r<=4), spot [7/12,0,3]", [] {
        Outcome o;
        std::string why;
        o.require(all_pass(run_grid({IdentityId::eq19}, {{"n", 12}}), why), why);
        o.require(all_pass(run_grid({IdentityId::thm5}, {{"n", 12}, {"r", 4}}), why), why);
        o.require(theorem5_expansion(2, 1).coeffs() == std::vector<Rational>{q(7, 12), q(0), q(3)}, "spot (2,1)");
        return o;
    });

    criteria.emplace_back("AC9 product formula (n<=14, 1<=m<=n-2), hand instances, m=0 fails and is rejected", [] {
        Outcome o;
        std::string why;
        const auto reps = run_grid({IdentityId::eq20}, {{"n", 14}});
        o.require(all_pass(reps, why), why);
        std::size_t expected = 0;
        for (unsigned n = 3; n <= 14; ++n)
            expected += n - 2;
        o.require(reps.size() == expected, "grid size " + std::to_string(reps.size()));
        o.require(check_eq20(3, 1).lhs == parse_polynomial("x^3 - 3/2*x^2 + 2/3*x - 1/12") && check_eq20(3, 1).pass,
                  "instance (3,1)");
        o.require(check_eq20(4, 2).pass && check_eq20(4, 2).rhs.coeff(0) == q(1, 36), "instance (4,2)");
        o.require(bernoulli_poly(4) != eq20_rhs(4, 0), "m=0 unexpectedly holds at n=4");
        bool rejected = false;
        try {
            check_eq20(4, 0);
        } catch (const std::invalid_argument&) {
            rejected = true;
        }
        o.require(rejected, "m=0 not rejected");
        return o;
    });

    criteria.emplace_back("AC10 corrected product expansion passes (n<=12, r<=4); literal form has frozen gap at (4,2,1)", [] {
        Outcome o;
        std::string why;
        o.require(all_pass(run_grid({IdentityId::thm6_corrected}, {{"n", 12}, {"r", 4}}), why), why);

        const Polynomial frozen = parse_polynomial("x^4 - 2*x^3 + 4/3*x^2 - 1/3*x + 1/180");
        const auto printed = check_theorem6(4, 2, 1, Theorem6Mode::printed);
        o.require(!printed.pass, "literal form unexpectedly passes at (4,2,1)");
        o.require(printed.discrepancy == frozen, "literal gap " + render_polynomial(printed.discrepancy));

        // Same gap through the elimination oracle, independent of the library's expansion code.
        const auto truth = oracle::expansion_by_elimination(bernoulli_poly(2) * bernoulli_poly(2), 1);
        const auto literal = theorem6_expansion(4, 2, 1, Theorem6Mode::printed);
        Polynomial gap;
        for (unsigned k = 0; k < truth.size(); ++k)
            gap += (truth[k] - literal.coeff(k)) * oracle::euler_poly_order(k, 1);
        o.require(gap == frozen, "oracle gap " + render_polynomial(gap));
        return o;
    });

    criteria.emplace_back("AC11 CLI json round-trip, byte determinism, exit codes, golden files", [] {
        Outcome o;
        const std::vector<std::string> verify_json{"verify", "--identity", "all", "--n-max", "6",
                                                   "--r-max", "2", "--s-max", "2", "--format", "json"};
        const auto a = cli_run(verify_json);
        const auto b = cli_run(verify_json);
        o.require(a.code == cli::exit_ok, "verify exit code " + std::to_string(a.code));
        o.require(a.out == b.out, "verify output not byte-identical");
        const auto parsed = reports_from_json(Json::parse(a.out));
        const auto expected =
            run_grid({std::begin(all_identities), std::end(all_identities)}, {{"n", 6}, {"r", 2}, {"s", 2}});
        o.require(parsed == expected, "json reports differ from in-memory results");

        const auto ex = cli_run({"expand", "--poly", "3/2*x^4 - x + 1/7", "--order", "2", "--format", "json"});
        o.require(expansion_from_json(Json::parse(ex.out)) == expand_theorem1(parse_polynomial("3/2*x^4 - x + 1/7"), 2),
                  "expansion json round-trip");

        o.require(cli_run({"poly", "--family", "nope", "--n", "1"}).code == cli::exit_usage, "bad family exit code");
        o.require(cli_run({"expand", "--poly", "x +", "--order", "1"}).code == cli::exit_usage, "parse error exit code");
        o.require(cli_run({"verify", "--identity", "thm6-printed", "--n-max", "6", "--r-max", "2"}).code == cli::exit_ok,
                  "audit mode changed exit code");
        auto bad = make_report(IdentityId::eq17, {{"n", 1}}, Polynomial::x(), Polynomial());
        o.require(cli::verify_exit_code({bad}) == cli::exit_verify_failed, "failure exit code");

        std::size_t golden = 0;
        for (const auto& entry : std::filesystem::directory_iterator(EULERBASIS_GOLDEN_DIR)) {
            if (entry.path().extension() != ".args")
                continue;
            std::vector<std::string> args;
            std::istringstream lines(read_file(entry.path()));
            for (std::string line; std::getline(lines, line);)
                if (!line.empty())
                    args.push_back(line);
            auto stem = entry.path();
            stem.replace_extension();
            const auto r = cli_run(args);
            o.require(r.out == read_file(stem.string() + ".out"), "golden output " + entry.path().filename().string());
            o.require(std::to_string(r.code) + "\n" == read_file(stem.string() + ".code"),
                      "golden exit code " + entry.path().filename().string());
            ++golden;
        }
        o.require(golden > 0, "no golden files found");
        if (o.ok)
            o.detail = std::to_string(golden) + " golden files";
        return o;
    });

    int failures = 0;
    for (auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << name;
        if (!o.detail.empty())
            std::cout << " (" << o.detail << ")";
        std::cout << "\n";
        failures += o.ok ? 0 : 1;
    }

    const double total = std::chrono::duration<double>(Clock::now() - suite_start).count();
    const bool in_budget = total < suite_budget_seconds;
    std::cout << (in_budget ? "[PASS] " : "[FAIL] ") << "total runtime under 2 minutes (" << total << " s)\n";
    failures += in_budget ? 0 : 1;

    std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
