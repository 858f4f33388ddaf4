#ifndef EULERBASIS_TOOLS_CLI_APP_HPP
#define EULERBASIS_TOOLS_CLI_APP_HPP

// Command-line driver shared by the eulerbasis binary and the CLI tests.
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <eulerbasis/eulerbasis.hpp>
#include <eulerbasis/json_io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace eulerbasis::cli {

enum class OutputFormat { plain, csv, latex, json };

inline constexpr int exit_ok = 0;
inline constexpr int exit_verify_failed = 1;
inline constexpr int exit_usage = 2;

class usage_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string join(const std::vector<std::string>& items, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i)
        out += (i ? sep : "") + items[i];
    return out;
}

inline std::vector<std::string> short_rationals(std::span<const Rational> values)
{
    std::vector<std::string> out;
    for (const auto& q : values)
        out.push_back(to_string(q));
    return out;
}

inline std::string latex_value(const Rational& q)
{
    std::string s = q < 0 ? "-" : "";
    return s + eulerbasis::detail::latex_rational(abs(q));
}

inline std::string render_params(const Params& params, const std::string& sep)
{
    std::vector<std::string> parts;
    for (const auto& [k, v] : params)
        parts.push_back(k + "=" + std::to_string(v));
    return join(parts, sep);
}

inline Polynomial family_member(const std::string& family, unsigned n, unsigned order)
{
    if (family == "euler")
        return euler_poly_order(n, order);
    if (family == "bernoulli")
        return bernoulli_poly_order(n, order);
    throw usage_error("unknown family \"" + family + "\"");
}

inline std::string expansion_latex(const EulerExpansion& e)
{
    if (e.coeffs().empty())
        return "0";
    std::string out;
    for (std::size_t k = 0; k < e.coeffs().size(); ++k) {
        const Rational& b = e.coeffs()[k];
        if (b == 0)
            continue;
        out += out.empty() ? (b < 0 ? "-" : "") : (b < 0 ? " - " : " + ");
        const Rational mag = abs(b);
        if (mag != 1)
            out += eulerbasis::detail::latex_rational(mag);
        out += "E_{" + std::to_string(k) + "}^{(" + std::to_string(e.order()) + ")}(x)";
    }
    return out;
}

} // namespace detail

struct PolyArgs {
    std::string family;
    unsigned n = 0;
    unsigned order = 1;
};

inline std::string cmd_poly(const PolyArgs& a, OutputFormat format)
{
    const Polynomial p = detail::family_member(a.family, a.n, a.order);
    switch (format) {
    case OutputFormat::plain:
        return render_polynomial(p) + "\n";
    case OutputFormat::latex:
        return render_polynomial(p, PolyFormat::latex) + "\n";
    case OutputFormat::csv:
        return detail::join(detail::short_rationals(p.coeffs()), ",") + "\n";
    case OutputFormat::json: {
        Json j;
        j["schema"] = polynomial_schema;
        j["family"] = a.family;
        j["n"] = a.n;
        j["order"] = a.order;
        j["coeffs"] = polynomial_to_json(p);
        return j.dump(2) + "\n";
    }
    }
    return {};
}

struct ExpandArgs {
    std::string poly;
    unsigned order = 1;
};

inline std::string cmd_expand(const ExpandArgs& a, OutputFormat format)
{
    const Polynomial p = parse_polynomial(a.poly);
    const EulerExpansion e = expand_theorem1(p, a.order);
    switch (format) {
    case OutputFormat::plain:
    case OutputFormat::csv:
        return (e.coeffs().empty() ? std::string("0") : detail::join(detail::short_rationals(e.coeffs()), ",")) + "\n";
    case OutputFormat::latex:
        return detail::expansion_latex(e) + "\n";
    case OutputFormat::json: {
        Json j = expansion_to_json(e);
        j["input"] = polynomial_to_json(p);
        return j.dump(2) + "\n";
    }
    }
    return {};
}

struct TableArgs {
    std::string family;
    unsigned n_max = 0;
    std::optional<unsigned> order_max;
};

inline std::string cmd_table(const TableArgs& a, OutputFormat format)
{
    const bool numbers = a.family == "euler-number" || a.family == "bernoulli-number";
    const bool euler = a.family == "euler" || a.family == "euler-number";
    if (!numbers && a.family != "euler" && a.family != "bernoulli")
        throw usage_error("unknown family \"" + a.family + "\"");

    // Without --order-max only the classical (order 1) row is produced.
    std::vector<unsigned> orders;
    if (a.order_max)
        for (unsigned r = 0; r <= *a.order_max; ++r)
            orders.push_back(r);
    else
        orders.push_back(1);

    struct Row {
        unsigned order;
        std::vector<Polynomial> polys;
        std::vector<Rational> values;
    };
    std::vector<Row> rows;
    for (unsigned r : orders) {
        Row row{r, {}, {}};
        if (numbers) {
            row.values = euler ? euler_numbers_order(a.n_max, r) : bernoulli_numbers_order(a.n_max, r);
        } else {
            const auto nums = euler ? euler_numbers_order(a.n_max, r) : bernoulli_numbers_order(a.n_max, r);
            for (unsigned n = 0; n <= a.n_max; ++n)
                row.polys.push_back(appell_polynomial(nums, n));
        }
        rows.push_back(std::move(row));
    }

    std::ostringstream out;
    switch (format) {
    case OutputFormat::plain:
    case OutputFormat::csv:
        for (const auto& row : rows) {
            std::vector<std::string> cells;
            if (numbers)
                cells = detail::short_rationals(row.values);
            else
                for (const auto& p : row.polys)
                    cells.push_back(render_polynomial(p));
            out << detail::join(cells, ",") << "\n";
        }
        break;
    case OutputFormat::latex: {
        out << "\\begin{tabular}{c|" << std::string(a.n_max + 1, 'c') << "}\n";
        out << (euler ? "r" : "s");
        for (unsigned n = 0; n <= a.n_max; ++n)
            out << " & $n=" << n << "$";
        out << " \\\\ \\hline\n";
        for (const auto& row : rows) {
            out << row.order;
            for (unsigned n = 0; n <= a.n_max; ++n)
                out << " & $"
                    << (numbers ? detail::latex_value(row.values[n]) : render_polynomial(row.polys[n], PolyFormat::latex))
                    << "$";
            out << " \\\\\n";
        }
        out << "\\end{tabular}\n";
        break;
    }
    case OutputFormat::json: {
        Json j;
        j["schema"] = table_schema;
        j["family"] = a.family;
        j["n_max"] = a.n_max;
        Json jrows = Json::array();
        for (const auto& row : rows) {
            Json values = Json::array();
            if (numbers)
                values = rationals_to_json(row.values);
            else
                for (const auto& p : row.polys)
                    values.push_back(polynomial_to_json(p));
            jrows.push_back({{"order", row.order}, {"values", values}});
        }
        j["rows"] = jrows;
        out << j.dump(2) << "\n";
        break;
    }
    }
    return out.str();
}

struct VerifyArgs {
    std::vector<std::string> identities;
    GridBounds bounds;
    unsigned threads = 1;
};

struct VerifyResult {
    std::string text;
    int exit_code = exit_ok;
};

inline std::set<IdentityId> resolve_identities(const std::vector<std::string>& names)
{
    std::set<IdentityId> ids;
    for (const auto& name : names) {
        if (name == "all") {
            ids.insert(std::begin(all_identities), std::end(all_identities));
            continue;
        }
        const auto id = identity_from_name(name);
        if (!id)
            throw usage_error("unknown identity \"" + name + "\"");
        ids.insert(*id);
    }
    return ids;
}

/// 1 when any non-audit report failed, else 0.
inline int verify_exit_code(const std::vector<IdentityReport>& reports)
{
    for (const auto& rep : reports)
        if (is_unexpected_failure(rep))
            return exit_verify_failed;
    return exit_ok;
}

inline VerifyResult cmd_verify(const VerifyArgs& a, OutputFormat format)
{
    const auto reports = run_grid(resolve_identities(a.identities), a.bounds, a.threads);
    VerifyResult result;
    result.exit_code = verify_exit_code(reports);

    std::ostringstream out;
    switch (format) {
    case OutputFormat::plain: {
        std::size_t passed = 0, failed = 0, findings = 0;
        for (const auto& rep : reports) {
            out << identity_name(rep.id) << " " << detail::render_params(rep.params, " ") << ": ";
            if (rep.pass && !is_unexpected_failure(rep)) {
                out << "PASS\n";
                ++passed;
            } else if (is_audit_identity(rep.id)) {
                out << "DISCREPANCY " << render_polynomial(rep.discrepancy) << "\n";
                ++findings;
            } else {
                out << "FAIL " << render_polynomial(rep.discrepancy);
                if (!rep.note.empty())
                    out << " (" << rep.note << ")";
                out << "\n";
                ++failed;
            }
        }
        out << "total " << reports.size() << ", passed " << passed << ", failed " << failed
            << ", audit discrepancies " << findings << "\n";
        break;
    }
    case OutputFormat::csv:
        out << "identity,params,pass,oracle_agrees,discrepancy\n";
        for (const auto& rep : reports)
            out << identity_name(rep.id) << "," << detail::render_params(rep.params, ";") << ","
                << (rep.pass ? "true" : "false") << ","
                << (rep.oracle_agrees ? (*rep.oracle_agrees ? "true" : "false") : "") << ","
                << render_polynomial(rep.discrepancy) << "\n";
        break;
    case OutputFormat::latex:
        out << "\\begin{tabular}{llcl}\n";
        out << "identity & parameters & pass & discrepancy \\\\ \\hline\n";
        for (const auto& rep : reports)
            out << "\\texttt{" << identity_name(rep.id) << "} & $" << detail::render_params(rep.params, ", ")
                << "$ & " << (rep.pass ? "yes" : "no") << " & $"
                << render_polynomial(rep.discrepancy, PolyFormat::latex) << "$ \\\\\n";
        out << "\\end{tabular}\n";
        break;
    case OutputFormat::json:
        out << reports_to_json(reports).dump(2) << "\n";
        break;
    }
    result.text = out.str();
    return result;
}

/// Runs one invocation. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact higher-order Euler/Bernoulli polynomials, Euler-basis expansion, identity checks", "eulerbasis"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "plain";
    std::string out_path;
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"plain", "csv", "latex", "json"}));
    app.add_option("--out", out_path, "Write output to FILE instead of stdout");

    PolyArgs poly_args;
    auto* poly = app.add_subcommand("poly", "Print one polynomial of a family");
    poly->add_option("--family", poly_args.family, "euler | bernoulli")->required()
        ->check(CLI::IsMember({"euler", "bernoulli"}));
    poly->add_option("--n", poly_args.n, "Degree")->required();
    poly->add_option("--order", poly_args.order, "Order r (Euler) or s (Bernoulli)")->capture_default_str();

    ExpandArgs expand_args;
    auto* expand = app.add_subcommand("expand", "Coordinates b_0..b_n in the order-r Euler basis");
    expand->add_option("--poly", expand_args.poly, "Polynomial in x, e.g. \"3/2*x^2 - x + 1\"")->required();
    expand->add_option("--order", expand_args.order, "Basis order r")->capture_default_str();

    TableArgs table_args;
    unsigned table_order_max = 0;
    auto* table = app.add_subcommand("table", "Tabulate a family over degree and order");
    table->add_option("--family", table_args.family, "euler | bernoulli | euler-number | bernoulli-number")
        ->required()
        ->check(CLI::IsMember({"euler", "bernoulli", "euler-number", "bernoulli-number"}));
    table->add_option("--n-max", table_args.n_max, "Largest degree")->required();
    auto* order_opt = table->add_option("--order-max", table_order_max, "Largest order (default: order 1 only)");

    VerifyArgs verify_args;
    unsigned n_max = 0, m_max = 0, r_max = 0, s_max = 0, k_max = 0;
    auto* verify = app.add_subcommand("verify", "Check identities exactly over a parameter grid");
    verify->add_option("--identity", verify_args.identities,
                       "cor2 cor3 eq17 thm4 eq19 thm5 eq20 thm6-printed thm6-corrected | all")
        ->required()
        ->delimiter(',');
    auto* n_opt = verify->add_option("--n-max", n_max);
    auto* m_opt = verify->add_option("--m-max", m_max);
    auto* r_opt = verify->add_option("--r-max", r_max);
    auto* s_opt = verify->add_option("--s-max", s_max);
    auto* k_opt = verify->add_option("--k-max", k_max);
    verify->add_option("--threads", verify_args.threads, "Worker threads")->capture_default_str();

    std::vector<std::string> argv_store{"eulerbasis"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store)
        argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    const OutputFormat format = format_name == "csv"     ? OutputFormat::csv
                                : format_name == "latex" ? OutputFormat::latex
                                : format_name == "json"  ? OutputFormat::json
                                                         : OutputFormat::plain;
    std::string text;
    int code = exit_ok;
    try {
        if (*poly) {
            text = cmd_poly(poly_args, format);
        } else if (*expand) {
            text = cmd_expand(expand_args, format);
        } else if (*table) {
            if (*order_opt)
                table_args.order_max = table_order_max;
            text = cmd_table(table_args, format);
        } else {
            auto set_bound = [&](CLI::Option* opt, const char* key, unsigned v) {
                if (*opt)
                    verify_args.bounds[key] = v;
            };
            set_bound(n_opt, "n", n_max);
            set_bound(m_opt, "m", m_max);
            set_bound(r_opt, "r", r_max);
            set_bound(s_opt, "s", s_max);
            set_bound(k_opt, "k", k_max);
            auto result = cmd_verify(verify_args, format);
            text = std::move(result.text);
            code = result.exit_code;
        }
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << out_path << " for writing\n";
            return exit_usage;
        }
        file << text;
    }
    return code;
}

} // namespace eulerbasis::cli

#endif
