#ifndef EULERBASIS_JSON_IO_HPP
#define EULERBASIS_JSON_IO_HPP

// JSON documents for expansions, polynomials and verification reports.
// Rationals are strings "num/den"; polynomials are ascending coefficient
// arrays. Schemas live in docs/schemas/.

#include "euler_basis.hpp"
#include "identities.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace eulerbasis {

using Json = nlohmann::ordered_json;

inline constexpr const char* expansion_schema = "eulerbasis.expansion/1";
inline constexpr const char* polynomial_schema = "eulerbasis.polynomial/1";
inline constexpr const char* table_schema = "eulerbasis.table/1";
inline constexpr const char* report_schema = "eulerbasis.verify-report/1";

inline Json rational_to_json(const Rational& q)
{
    return to_fraction_string(q);
}

inline Rational rational_from_json(const Json& j)
{
    if (!j.is_string())
        throw std::invalid_argument("expected a rational string, got " + j.dump());
    return parse_rational(j.get<std::string>());
}

inline Json rationals_to_json(std::span<const Rational> values)
{
    Json arr = Json::array();
    for (const auto& q : values)
        arr.push_back(rational_to_json(q));
    return arr;
}

inline std::vector<Rational> rationals_from_json(const Json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("expected an array of rationals");
    std::vector<Rational> out;
    for (const auto& v : j)
        out.push_back(rational_from_json(v));
    return out;
}

inline Json polynomial_to_json(const Polynomial& p)
{
    return rationals_to_json(p.coeffs());
}

inline Polynomial polynomial_from_json(const Json& j)
{
    return Polynomial(rationals_from_json(j));
}

inline Json expansion_to_json(const EulerExpansion& e)
{
    Json j;
    j["schema"] = expansion_schema;
    j["order"] = e.order();
    j["coeffs"] = rationals_to_json(e.coeffs());
    return j;
}

inline EulerExpansion expansion_from_json(const Json& j)
{
    return EulerExpansion(j.at("order").get<unsigned>(), rationals_from_json(j.at("coeffs")));
}

inline Json report_to_json(const IdentityReport& rep)
{
    Json j;
    j["identity"] = std::string(identity_name(rep.id));
    Json params = Json::object();
    for (const auto& [name, value] : rep.params)
        params[name] = value;
    j["params"] = params;
    j["lhs"] = polynomial_to_json(rep.lhs);
    j["rhs"] = polynomial_to_json(rep.rhs);
    j["discrepancy"] = polynomial_to_json(rep.discrepancy);
    j["pass"] = rep.pass;
    j["audit"] = is_audit_identity(rep.id);
    j["oracle_agrees"] = rep.oracle_agrees ? Json(*rep.oracle_agrees) : Json(nullptr);
    j["note"] = rep.note.empty() ? Json(nullptr) : Json(rep.note);
    return j;
}

inline IdentityReport report_from_json(const Json& j)
{
    IdentityReport rep;
    const auto name = j.at("identity").get<std::string>();
    const auto id = identity_from_name(name);
    if (!id)
        throw std::invalid_argument("unknown identity \"" + name + "\"");
    rep.id = *id;
    for (const auto& [key, value] : j.at("params").items())
        rep.params.emplace_back(key, value.get<long>());
    rep.lhs = polynomial_from_json(j.at("lhs"));
    rep.rhs = polynomial_from_json(j.at("rhs"));
    rep.discrepancy = polynomial_from_json(j.at("discrepancy"));
    rep.pass = j.at("pass").get<bool>();
    if (rep.pass != rep.discrepancy.is_zero())
        throw std::invalid_argument("report is inconsistent: pass flag disagrees with discrepancy");
    if (j.contains("oracle_agrees") && !j["oracle_agrees"].is_null())
        rep.oracle_agrees = j["oracle_agrees"].get<bool>();
    if (j.contains("note") && !j["note"].is_null())
        rep.note = j["note"].get<std::string>();
    return rep;
}

/// Reports whose failure should fail a verification run: every
/// non-audit report that did not pass, or whose expansion disagrees with
/// the direct expansion.
inline bool is_unexpected_failure(const IdentityReport& rep)
{
    if (is_audit_identity(rep.id))
        return false;
    return !rep.pass || rep.oracle_agrees == false;
}

inline Json reports_to_json(const std::vector<IdentityReport>& reports)
{
    Json j;
    j["schema"] = report_schema;
    Json arr = Json::array();
    std::size_t passed = 0, failed = 0, audit_findings = 0;
    for (const auto& rep : reports) {
        arr.push_back(report_to_json(rep));
        if (is_audit_identity(rep.id)) {
            audit_findings += rep.pass ? 0 : 1;
            continue;
        }
        if (is_unexpected_failure(rep))
            ++failed;
        else
            ++passed;
    }
    j["reports"] = arr;
    j["summary"] = {{"total", reports.size()}, {"passed", passed}, {"failed", failed}, {"audit_discrepancies", audit_findings}};
    return j;
}

inline std::vector<IdentityReport> reports_from_json(const Json& j)
{
    if (j.at("schema").get<std::string>() != report_schema)
        throw std::invalid_argument("unexpected schema " + j.at("schema").dump());
    std::vector<IdentityReport> out;
    for (const auto& r : j.at("reports"))
        out.push_back(report_from_json(r));
    return out;
}

} // namespace eulerbasis

#endif
