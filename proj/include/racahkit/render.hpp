///
/// \file   racahkit/render.hpp
///
/// \brief  Text forms of exact values, matrices, tensors and reports in the
///         pretty, csv and json output formats.
///

#ifndef RACAHKIT_RENDER_HPP
#define RACAHKIT_RENDER_HPP

#include "racahkit/exact.hpp"
#include "racahkit/intersection.hpp"
#include "racahkit/leonard.hpp"
#include "racahkit/matrix.hpp"
#include "racahkit/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>

namespace racahkit
{

enum class OutputFormat
{
    pretty,
    json,
    csv,
};

inline std::optional<OutputFormat> parse_format(const std::string& s)
{
    if (s == "pretty")
        return OutputFormat::pretty;
    if (s == "json")
        return OutputFormat::json;
    if (s == "csv")
        return OutputFormat::csv;
    return std::nullopt;
}

/// Rounds to 12 significant digits; display only.
inline double display_approx(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline std::string csv_escape(const std::string& cell)
{
    if (cell.find_first_of(",\"\n") == std::string::npos)
        return cell;
    std::string out = "\"";
    for (char ch : cell) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

/// A lone scalar has the same pretty and csv form.
inline std::string render(const BigRational& q, OutputFormat fmt)
{
    if (fmt == OutputFormat::json)
        return dump(Json{{"value", q.get_str()}, {"approx", display_approx(q.get_d())}});
    return q.get_str() + "\n";
}

inline Json surd_json(const Surd& s)
{
    return Json{{"coeff", s.coeff.get_str()}, {"radicand", s.radicand.get_str()}, {"approx", display_approx(s.approx())}};
}

inline std::string render(const Surd& s, OutputFormat fmt)
{
    if (fmt == OutputFormat::json)
        return dump(surd_json(s));
    if (fmt == OutputFormat::csv)
        return "coeff,radicand\n" + s.coeff.get_str() + "," + s.radicand.get_str() + "\n";
    return to_string(s) + "\n";
}

inline Json matrix_json(const RationalMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.order(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.order(); ++j)
            row.push_back(m(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Row-major. pretty: one comma-separated line per row. csv: the same
/// preceded by a header c0..cD.
inline std::string render(const RationalMatrix& m, OutputFormat fmt)
{
    if (fmt == OutputFormat::json)
        return dump(Json{{"order", m.order()}, {"rows", matrix_json(m)}});
    std::ostringstream os;
    if (fmt == OutputFormat::csv) {
        for (std::size_t j = 0; j < m.order(); ++j)
            os << (j ? "," : "") << 'c' << j;
        os << '\n';
    }
    for (std::size_t i = 0; i < m.order(); ++i) {
        for (std::size_t j = 0; j < m.order(); ++j)
            os << (j ? "," : "") << m(i, j).get_str();
        os << '\n';
    }
    return os.str();
}

inline std::string render(const IntersectionTensor& t, OutputFormat fmt)
{
    const std::size_t n = t.order();
    if (fmt == OutputFormat::json) {
        Json entries = Json::array();
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    entries.push_back(Json{{"h", h}, {"i", i}, {"j", j}, {"p", t.at(h, i, j).get_str()}});
        return dump(Json{{"D", t.D}, {"route", to_string(t.route)}, {"entries", entries}});
    }
    std::ostringstream os;
    if (fmt == OutputFormat::csv) {
        os << "h,i,j,p\n";
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    os << h << ',' << i << ',' << j << ',' << t.at(h, i, j).get_str() << '\n';
        return os.str();
    }
    os << "p^h_{i,j} for D=" << t.D << " (route " << to_string(t.route) << "), row i, column j\n";
    for (std::size_t h = 0; h < n; ++h) {
        os << "h=" << h << '\n';
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                os << (j ? "," : "") << t.at(h, i, j).get_str();
            os << '\n';
        }
    }
    return os.str();
}

inline std::string render(const RacahSystem& sys, OutputFormat fmt)
{
    const std::size_t n = sys.order();
    auto cell = [&](const std::vector<BigRational>& v, std::size_t i, bool defined) {
        return defined ? v[i].get_str() : std::string();
    };
    if (fmt == OutputFormat::json) {
        Json c = Json::array(), a = Json::array(), b = Json::array(), th = Json::array(), k = Json::array();
        for (std::size_t i = 0; i < n; ++i) {
            if (i >= 1)
                c.push_back(sys.c[i].get_str());
            a.push_back(sys.a[i].get_str());
            if (i + 1 < n)
                b.push_back(sys.b[i].get_str());
            th.push_back(sys.theta[i].get_str());
            k.push_back(sys.k[i].get_str());
        }
        return dump(Json{{"D", sys.D}, {"c", c}, {"a", a}, {"b", b}, {"theta", th}, {"k", k},
                         {"nu", sys.nu.get_str()}});
    }
    std::ostringstream os;
    if (fmt == OutputFormat::pretty)
        os << "D=" << sys.D << " nu=" << sys.nu.get_str() << '\n';
    os << "i,c,a,b,theta,k\n";
    for (std::size_t i = 0; i < n; ++i)
        os << i << ',' << cell(sys.c, i, i >= 1) << ',' << sys.a[i].get_str() << ',' << cell(sys.b, i, i + 1 < n)
           << ',' << sys.theta[i].get_str() << ',' << sys.k[i].get_str() << '\n';
    return os.str();
}

inline std::string render(const VerificationReport& r, OutputFormat fmt)
{
    if (fmt == OutputFormat::json)
        return dump(r.to_json());
    std::ostringstream os;
    if (fmt == OutputFormat::csv) {
        os << "campaign,checks_run,passed,check,params,expected,actual\n";
        const std::string lead = r.campaign + "," + std::to_string(r.checks_run) + "," + (r.passed() ? "true" : "false");
        if (r.violations.empty())
            os << lead << ",,,,\n";
        for (const auto& v : r.violations)
            os << lead << ',' << csv_escape(v.check) << ',' << csv_escape(v.params.dump()) << ','
               << csv_escape(v.expected) << ',' << csv_escape(v.actual) << '\n';
        return os.str();
    }
    os << "campaign " << r.campaign << ' ' << r.params.dump() << '\n'
       << "  checks run:  " << r.checks_run << '\n'
       << "  violations:  " << r.violations.size() << '\n';
    if (r.equality_cases)
        os << "  equality cases: " << r.equality_cases->size() << '\n';
    if (r.rng)
        os << "  rng: " << *r.rng << '\n';
    os << "  elapsed: " << r.elapsed_ms << " ms\n";
    for (const auto& v : r.violations)
        os << "  FAIL " << v.check << ' ' << v.params.dump() << " expected " << v.expected << ", got " << v.actual
           << '\n';
    os << (r.passed() ? "PASSED" : "FAILED") << '\n';
    return os.str();
}

} // namespace racahkit

#endif // RACAHKIT_RENDER_HPP
