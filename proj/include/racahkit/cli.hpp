///
/// \file   racahkit/cli.hpp
///
/// \brief  Command-line front end. Exit codes: 0 success or passed campaign,
///         1 failed campaign or domain error, 2 usage error.
///

#ifndef RACAHKIT_CLI_HPP
#define RACAHKIT_CLI_HPP

#include "racahkit/exact.hpp"
#include "racahkit/hyper.hpp"
#include "racahkit/intersection.hpp"
#include "racahkit/leonard.hpp"
#include "racahkit/racah.hpp"
#include "racahkit/render.hpp"
#include "racahkit/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace racahkit::cli
{

enum ExitCode : int
{
    ok         = 0,
    failed     = 1,
    usage      = 2,
};

namespace detail
{

inline std::vector<std::string> split_commas(const std::string& s)
{
    std::vector<std::string> parts;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');)
        parts.push_back(item);
    return parts;
}

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct DRange
{
    long d     = -1;
    long d_min = 1;
    long d_max = -1;

    void add_to(CLI::App* cmd)
    {
        cmd->add_option("--d", d, "single diameter D");
        cmd->add_option("--d-min", d_min, "smallest D (default 1)");
        cmd->add_option("--d-max", d_max, "largest D");
    }

    std::pair<long, long> resolve() const
    {
        if (d >= 0)
            return {d, d};
        if (d_max < 0)
            throw UsageError("give --d or --d-max");
        return {d_min, d_max};
    }
};

} // namespace detail

/// Parses and runs one command line (without the program name).
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Racah polynomials, Racah coefficients and intersection numbers", "racahkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "pretty";
    std::string out_path;
    app.add_option("--format", format_name, "pretty | json | csv")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    app.add_option("--out", out_path, "write output to FILE instead of stdout");

    long d = 0, index = 0;
    auto* system = app.add_subcommand("system", "parameter tables c, a, b, theta, k and nu");
    system->add_option("--d", d, "diameter D")->required();
    auto* utable = app.add_subcommand("utable", "u_i(theta_j), row i, column j");
    utable->add_option("--d", d, "diameter D")->required();
    auto* pmatrix = app.add_subcommand("pmatrix", "the matrix P, P_{i,j} = v_j(theta_i)");
    pmatrix->add_option("--d", d, "diameter D")->required();
    auto* bmatrix = app.add_subcommand("bmatrix", "B_i = v_i(A)");
    bmatrix->add_option("--d", d, "diameter D")->required();
    bmatrix->add_option("--i", index, "index i")->required();

    std::string route_name = "matrix";
    auto* ptensor = app.add_subcommand("ptensor", "intersection numbers p^h_{i,j}");
    ptensor->add_option("--d", d, "diameter D")->required();
    ptensor->add_option("--route", route_name, "matrix | sum | racah | appendix | all")
        ->check(CLI::IsMember({"matrix", "sum", "racah", "appendix", "all"}));

    std::string upper, lower;
    auto* f43 = app.add_subcommand("f43", "terminating 4F3 at unit argument");
    f43->add_option("--upper", upper, "a1,a2,a3,a4 as integers or p/q")->required();
    f43->add_option("--lower", lower, "b1,b2,b3 as integers or p/q")->required();

    std::vector<std::int64_t> spins;
    auto* w = app.add_subcommand("w", "Racah coefficient W(a,b,c,d;e,f)");
    w->add_option("--spins", spins, "2a,2b,2c,2d,2e,2f (twice-values)")->required()->delimiter(',')->expected(6);
    w->add_flag("--half", "spins are twice-values (the only accepted form)");

    auto* verify = app.add_subcommand("verify", "run a verification campaign");
    verify->require_subcommand(1);
    unsigned threads = 0;
    detail::DRange range;
    SampleSpec sample;
    long routes_max_d = -1, structure_max_d = -1;

    auto* v_kt = verify->add_subcommand("kt", "|u_i(theta_j)| <= 1");
    auto* v_leonard = verify->add_subcommand("leonard", "Leonard pair relations");
    auto* v_inter = verify->add_subcommand("intersection", "intersection number identities");
    auto* v_wclosed = verify->add_subcommand("wclosed", "W(D/2,D/2,D/2,D/2;i,j) closed form");
    for (auto* cmd : {v_kt, v_leonard, v_inter, v_wclosed}) {
        range.add_to(cmd);
        cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
    }
    v_inter->add_option("--routes-max-d", routes_max_d, "compare all four routes only for D up to this");
    v_inter->add_option("--structure-max-d", structure_max_d, "check structure constants only for D up to this");

    auto* v_be = verify->add_subcommand("be", "Biedenharn-Elliott identity on seeded samples");
    auto* v_whipple = verify->add_subcommand("whipple", "Whipple transformation on seeded samples");
    for (auto* cmd : {v_be, v_whipple}) {
        cmd->add_option("--samples", sample.count, "number of samples");
        cmd->add_option("--seed", sample.seed, "64-bit seed");
    }
    v_be->add_option("--max-spin", sample.max_twice_spin, "largest twice-spin drawn");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return usage;
    }

    const OutputFormat fmt = *parse_format(format_name);
    std::string text;
    int code = ok;

    try {
        if (system->parsed()) {
            text = render(build_system(d), fmt);
        } else if (utable->parsed()) {
            text = render(u_table(build_system(d)), fmt);
        } else if (pmatrix->parsed()) {
            text = render(matrix_p(build_system(d)), fmt);
        } else if (bmatrix->parsed()) {
            text = render(b_matrix(build_system(d), index), fmt);
        } else if (ptensor->parsed()) {
            const RacahSystem sys = build_system(d);
            if (route_name == "all") {
                const IntersectionTensor base = p_tensor(sys, TensorRoute::matrix);
                for (TensorRoute r : all_routes) {
                    if (!p_tensor(sys, r).same_values(base)) {
                        err << "route " << to_string(r) << " disagrees with the matrix route\n";
                        code = failed;
                    }
                }
                text = render(base, fmt);
            } else {
                text = render(p_tensor(sys, *parse_route(route_name)), fmt);
            }
        } else if (f43->parsed()) {
            const auto up = detail::split_commas(upper);
            const auto lo = detail::split_commas(lower);
            if (up.size() != 4 || lo.size() != 3)
                throw detail::UsageError("--upper needs 4 values and --lower 3");
            HypParams p;
            for (std::size_t k = 0; k < 4; ++k)
                p.upper[k] = parse_rational(up[k]);
            for (std::size_t k = 0; k < 3; ++k)
                p.lower[k] = parse_rational(lo[k]);
            text = render(eval_4f3_unit(p), fmt);
        } else if (w->parsed()) {
            for (auto s : spins)
                if (s < 0)
                    throw DomainError("spins must be nonnegative");
            text = render(racah_w(SpinSextuple::from_twice(spins[0], spins[1], spins[2], spins[3], spins[4], spins[5])),
                          fmt);
        } else if (verify->parsed()) {
            VerificationReport report;
            if (v_kt->parsed()) {
                const auto [lo, hi] = range.resolve();
                KtOptions opt;
                opt.threads = threads;
                report = verify_kt(lo, hi, opt);
            } else if (v_leonard->parsed()) {
                const auto [lo, hi] = range.resolve();
                report = verify_leonard(lo, hi, {threads});
            } else if (v_inter->parsed()) {
                const auto [lo, hi] = range.resolve();
                IntersectionOptions opt;
                opt.threads         = threads;
                opt.routes_max_d    = routes_max_d;
                opt.structure_max_d = structure_max_d;
                report = verify_intersection(lo, hi, opt);
            } else if (v_wclosed->parsed()) {
                const auto [lo, hi] = range.resolve();
                if (lo != 1 && range.d < 0)
                    throw detail::UsageError("wclosed always starts at D=1; give --d-max");
                report = verify_w_closed(hi, {threads});
            } else if (v_be->parsed()) {
                report = verify_be(sample);
            } else if (v_whipple->parsed()) {
                report = verify_whipple(sample);
            }
            text = render(report, fmt);
            if (!report.passed())
                code = failed;
        }
    } catch (const detail::UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return failed;
    }

    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(out_path);
        if (!file) {
            err << "error: cannot open " << out_path << " for writing\n";
            return failed;
        }
        file << text;
    }
    return code;
}

} // namespace racahkit::cli

#endif // RACAHKIT_CLI_HPP
