///
/// \file   racahkit/report.hpp
///
/// \brief  Machine-readable outcome of a verification campaign.
///

#ifndef RACAHKIT_REPORT_HPP
#define RACAHKIT_REPORT_HPP

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace racahkit
{

using Json = nlohmann::ordered_json;

/// One failed check. Values are exact strings ("p/q", "q*sqrt(m)").
struct Violation
{
    std::string check;
    Json        params;
    std::string expected;
    std::string actual;

    Json to_json() const
    {
        return Json{{"check", check}, {"params", params}, {"expected", expected}, {"actual", actual}};
    }

    static Violation from_json(const Json& j)
    {
        return {j.at("check").get<std::string>(), j.at("params"), j.at("expected").get<std::string>(),
                j.at("actual").get<std::string>()};
    }

    bool operator==(const Violation&) const = default;
};

struct VerificationReport
{
    std::string                      campaign;
    Json                             params = Json::object();
    std::int64_t                     checks_run = 0;
    std::vector<Violation>           violations;
    std::optional<std::vector<Json>> equality_cases;
    std::int64_t                     elapsed_ms = 0;
    std::optional<std::string>       rng;

    bool passed() const { return violations.empty(); }

    /// Puts violations and equality cases in canonical order.
    void normalize()
    {
        std::sort(violations.begin(), violations.end(),
                  [](const Violation& a, const Violation& b) { return a.to_json() < b.to_json(); });
        if (equality_cases)
            std::sort(equality_cases->begin(), equality_cases->end());
    }

    void check(bool ok, const std::string& name, Json where, const std::string& expected, const std::string& actual)
    {
        ++checks_run;
        if (!ok)
            violations.push_back({name, std::move(where), expected, actual});
    }

    Json to_json() const
    {
        Json j;
        j["campaign"]   = campaign;
        j["params"]     = params;
        j["checks_run"] = checks_run;
        j["violations"] = Json::array();
        for (const auto& v : violations)
            j["violations"].push_back(v.to_json());
        if (equality_cases)
            j["equality_cases"] = *equality_cases;
        j["elapsed_ms"] = elapsed_ms;
        j["passed"]     = passed();
        if (rng)
            j["rng"] = *rng;
        return j;
    }

    static VerificationReport from_json(const Json& j)
    {
        VerificationReport r;
        r.campaign   = j.at("campaign").get<std::string>();
        r.params     = j.at("params");
        r.checks_run = j.at("checks_run").get<std::int64_t>();
        for (const auto& v : j.at("violations"))
            r.violations.push_back(Violation::from_json(v));
        if (j.contains("equality_cases"))
            r.equality_cases = j.at("equality_cases").get<std::vector<Json>>();
        r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
        if (j.contains("rng"))
            r.rng = j.at("rng").get<std::string>();
        if (j.at("passed").get<bool>() != r.passed())
            throw std::invalid_argument("report 'passed' disagrees with its violations");
        return r;
    }
};

/// Combines two shards of one campaign. Records are kept in canonical
/// (sorted) order so the result does not depend on shard order.
inline VerificationReport merge(const VerificationReport& x, const VerificationReport& y)
{
    if (x.campaign != y.campaign || x.params != y.params || x.rng != y.rng)
        throw std::invalid_argument("cannot merge reports of different campaigns");
    VerificationReport r = x;
    r.checks_run += y.checks_run;
    r.elapsed_ms += y.elapsed_ms;
    r.violations.insert(r.violations.end(), y.violations.begin(), y.violations.end());
    if (x.equality_cases || y.equality_cases) {
        std::vector<Json> cases = x.equality_cases.value_or(std::vector<Json>{});
        const auto more = y.equality_cases.value_or(std::vector<Json>{});
        cases.insert(cases.end(), more.begin(), more.end());
        r.equality_cases = std::move(cases);
    }
    r.normalize();
    return r;
}

} // namespace racahkit

#endif // RACAHKIT_REPORT_HPP
