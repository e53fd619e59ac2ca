#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "momentsum/distributions.hpp"
#include "momentsum/errors.hpp"
#include "momentsum/limits.hpp"
#include "momentsum/moment_poly.hpp"
#include "momentsum/verify.hpp"

namespace {

using namespace momentsum;

// 0 ok, 2 usage, 3 domain error, 4 verification failure
enum ExitCode { kOk = 0, kUsage = 2, kDomain = 3, kVerifyFailed = 4 };

std::string fmt_double(double value)
{
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

std::string join_parts(const std::vector<int>& parts, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(parts[i]);
    }
    return out;
}

int run_expand(int p, bool symmetric, const std::string& format, int order_cap)
{
    ExpansionMode mode = symmetric ? ExpansionMode::Symmetric : ExpansionMode::General;
    MomentPoly expr = moment_of_sum(p, mode, order_cap);
    if (format == "json") {
        nlohmann::json doc = to_json(expr);
        doc["mode"] = symmetric ? "symmetric" : "general";
        std::cout << doc.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "parts,degree,coefficient\n";
        for (const auto& [monomial, npoly] : expr.terms()) {
            std::string parts = join_parts(monomial.parts(), " ");
            for (auto it = npoly.coefficients().rbegin();
                 it != npoly.coefficients().rend(); ++it)
                std::cout << parts << "," << it->first << "," << it->second.str()
                          << "\n";
        }
    } else {
        std::cout << render_text(expr) << "\n";
    }
    return kOk;
}

int run_eval(int p, long long n, const std::string& dist_spec,
             const std::string& format)
{
    MomentProvider dist = parse_distribution(dist_spec);
    MomentAssignment moments = moments_up_to(dist, p);
    MomentPoly expr = moment_of_sum(p, ExpansionMode::General);
    Rat value = evaluate(expr, n, moments);
    double approx = rat_to_double(value);
    if (format == "json") {
        nlohmann::json doc = {{"p", p},
                              {"n", n},
                              {"dist", dist.name()},
                              {"value", rat_to_string(value)},
                              {"value_float", approx}};
        std::cout << doc.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "p,n,dist,value,value_float\n";
        std::cout << p << "," << n << "," << dist.name() << ","
                  << rat_to_string(value) << "," << fmt_double(approx) << "\n";
    } else {
        std::cout << rat_to_string(value) << "\n";
        std::cout << "float: " << fmt_double(approx) << "\n";
    }
    return kOk;
}

CorrectionExpansion make_correction(const std::string& kind, int p,
                                    const MomentProvider& dist)
{
    MomentAssignment moments = moments_up_to(dist, p);
    return kind == "clt" ? clt_correction(p, moments) : lln_correction(p, moments);
}

int run_correction(const std::string& kind, int p, const std::string& dist_spec,
                   const std::string& format)
{
    MomentProvider dist = parse_distribution(dist_spec);
    CorrectionExpansion expansion = make_correction(kind, p, dist);
    if (format == "json") {
        nlohmann::json doc = to_json(expansion);
        doc["kind"] = kind;
        doc["dist"] = dist.name();
        std::cout << doc.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "inv_power,coefficient,coefficient_float\n";
        std::cout << "0," << rat_to_string(expansion.limit_term) << ","
                  << fmt_double(rat_to_double(expansion.limit_term)) << "\n";
        for (const auto& [j, coefficient] : expansion.inv_n_coefficients)
            std::cout << j << "," << rat_to_string(coefficient) << ","
                      << fmt_double(rat_to_double(coefficient)) << "\n";
    } else {
        std::cout << "kind: " << kind << "\n";
        std::cout << "p: " << p << "\n";
        std::cout << "dist: " << dist.name() << "\n";
        std::cout << "limit: " << rat_to_string(expansion.limit_term) << "\n";
        if (expansion.inv_n_coefficients.empty()) {
            std::cout << "correction: 0\n";
        } else {
            for (const auto& [j, coefficient] : expansion.inv_n_coefficients)
                std::cout << "1/n^" << j << ": " << rat_to_string(coefficient)
                          << "\n";
        }
    }
    return kOk;
}

std::vector<long long> default_schedule()
{
    std::vector<long long> schedule;
    for (long long n = 2; n <= 16384; n *= 2)
        schedule.push_back(n);
    return schedule;
}

std::vector<long long> parse_schedule(const std::string& text)
{
    std::vector<long long> schedule;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma - start);
        try {
            std::size_t used = 0;
            long long value = std::stoll(piece, &used);
            if (used != piece.size() || value < 1)
                throw std::invalid_argument(piece);
            schedule.push_back(value);
        } catch (const std::exception&) {
            throw SpecParseError("bad schedule entry '" + piece + "'");
        }
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    for (std::size_t i = 1; i < schedule.size(); ++i)
        if (schedule[i] <= schedule[i - 1])
            throw SpecParseError("schedule must be strictly increasing");
    return schedule;
}

int run_converge(const std::string& kind, int p, const std::string& dist_spec,
                 const std::vector<long long>& schedule, const std::string& format)
{
    MomentProvider dist = parse_distribution(dist_spec);
    CorrectionExpansion expansion = make_correction(kind, p, dist);

    struct Row {
        long long n;
        Rat normalized;
        Rat residual;
    };
    std::vector<Row> rows;
    for (long long n : schedule)
        rows.push_back({n, expansion.value_at(n), expansion.correction_at(n)});

    if (format == "json") {
        nlohmann::json out_rows = nlohmann::json::array();
        for (const Row& row : rows)
            out_rows.push_back({{"n", row.n},
                                {"normalized", rat_to_string(row.normalized)},
                                {"residual", rat_to_string(row.residual)},
                                {"normalized_float", rat_to_double(row.normalized)},
                                {"residual_float", rat_to_double(row.residual)}});
        nlohmann::json doc = {{"kind", kind},
                              {"p", p},
                              {"dist", dist.name()},
                              {"limit", rat_to_string(expansion.limit_term)},
                              {"rows", out_rows}};
        std::cout << doc.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "n,normalized,residual,normalized_float,residual_float\n";
        for (const Row& row : rows)
            std::cout << row.n << "," << rat_to_string(row.normalized) << ","
                      << rat_to_string(row.residual) << ","
                      << fmt_double(rat_to_double(row.normalized)) << ","
                      << fmt_double(rat_to_double(row.residual)) << "\n";
    } else {
        std::cout << "kind: " << kind << ", p: " << p << ", dist: " << dist.name()
                  << ", limit: " << rat_to_string(expansion.limit_term) << "\n";
        for (const Row& row : rows)
            std::cout << "n=" << row.n
                      << "  normalized=" << rat_to_string(row.normalized) << " ("
                      << fmt_double(rat_to_double(row.normalized)) << ")"
                      << "  residual=" << rat_to_string(row.residual) << " ("
                      << fmt_double(rat_to_double(row.residual)) << ")\n";
    }
    return kOk;
}

int run_verify(const VerifyOptions& options, const std::string& format)
{
    VerifyReport report = run_verification(options);
    if (format == "json") {
        nlohmann::json failures = nlohmann::json::array();
        for (const VerifyFailure& f : report.failures) {
            nlohmann::json moments = nlohmann::json::array();
            for (const Rat& value : f.moments)
                moments.push_back(rat_to_string(value));
            failures.push_back({{"p", f.p},
                                {"n", f.n},
                                {"trial", f.trial},
                                {"moments", moments},
                                {"symbolic", rat_to_string(f.symbolic)},
                                {"brute_force", rat_to_string(f.brute_force)}});
        }
        nlohmann::json doc = {{"passed", report.passed()},
                              {"checks", report.checks},
                              {"failures", failures}};
        std::cout << doc.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "p,n,trials,failures\n";
        for (int p = 1; p <= options.p_max; ++p)
            for (int n = 1; n <= options.n_max; ++n) {
                long long cell_failures = 0;
                for (const VerifyFailure& f : report.failures)
                    if (f.p == p && f.n == n)
                        ++cell_failures;
                std::cout << p << "," << n << "," << options.trials << ","
                          << cell_failures << "\n";
            }
    } else {
        std::cout << "checks: " << report.checks << "\n";
        std::cout << "failures: " << report.failures.size() << "\n";
        for (const VerifyFailure& f : report.failures) {
            std::cout << "FAIL p=" << f.p << " n=" << f.n << " trial=" << f.trial
                      << " moments=[";
            for (std::size_t i = 0; i < f.moments.size(); ++i) {
                if (i)
                    std::cout << ", ";
                std::cout << rat_to_string(f.moments[i]);
            }
            std::cout << "] symbolic=" << rat_to_string(f.symbolic)
                      << " brute_force=" << rat_to_string(f.brute_force) << "\n";
        }
        std::cout << (report.passed() ? "PASS" : "FAIL") << "\n";
    }
    return report.passed() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact moments of sums of iid random variables"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
    };

    int p = 0;
    long long n = 0;
    std::string dist_spec;
    bool symmetric = false;
    int order_cap = kDefaultOrderCap;
    std::string kind;
    std::string schedule_text;
    VerifyOptions verify_options;

    CLI::App* expand = app.add_subcommand(
        "expand", "Symbolic moment of the sum as a polynomial in n");
    expand->add_option("--p", p, "Moment order")->required();
    expand->add_flag("--symmetric", symmetric,
                     "Drop terms with odd moments (distribution symmetric about 0)");
    expand->add_option("--order-cap", order_cap, "Maximum allowed moment order")
        ->capture_default_str();
    add_format(expand);

    CLI::App* eval = app.add_subcommand(
        "eval", "Exact value of the p-th moment of the sum of n draws");
    eval->add_option("--p", p, "Moment order")->required();
    eval->add_option("--n", n, "Number of summands")->required();
    eval->add_option("--dist", dist_spec, "Distribution spec, e.g. uniform(-1,1)")
        ->required();
    add_format(eval);

    CLI::App* correction = app.add_subcommand(
        "correction", "Exact 1/n expansion of a normalized moment around its limit");
    correction->add_option("kind", kind, "clt: moments of S_n/sqrt(n*u2); lln: moments of S_n/n")
        ->required()
        ->check(CLI::IsMember({"clt", "lln"}));
    correction->add_option("--p", p, "Moment order")->required();
    correction->add_option("--dist", dist_spec, "Distribution spec")->required();
    add_format(correction);

    CLI::App* converge = app.add_subcommand(
        "converge", "Normalized moment and residual over a schedule of n values");
    converge->add_option("kind", kind, "clt or lln normalization")
        ->required()
        ->check(CLI::IsMember({"clt", "lln"}));
    converge->add_option("--p", p, "Moment order")->required();
    converge->add_option("--dist", dist_spec, "Distribution spec")->required();
    converge->add_option("--schedule", schedule_text,
                         "Comma-separated increasing n values (default powers of 2 up to 16384)");
    add_format(converge);

    CLI::App* verify = app.add_subcommand(
        "verify", "Check the symbolic engine against brute-force enumeration");
    verify->add_option("--p-max", verify_options.p_max, "Largest moment order")
        ->capture_default_str();
    verify->add_option("--n-max", verify_options.n_max, "Largest number of summands")
        ->capture_default_str();
    verify->add_option("--trials", verify_options.trials,
                       "Randomized moment assignments per grid cell")
        ->capture_default_str();
    verify->add_option("--seed", verify_options.seed, "Random seed")
        ->capture_default_str();
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (expand->parsed())
            return run_expand(p, symmetric, format, order_cap);
        if (eval->parsed())
            return run_eval(p, n, dist_spec, format);
        if (correction->parsed())
            return run_correction(kind, p, dist_spec, format);
        if (converge->parsed()) {
            std::vector<long long> schedule = schedule_text.empty()
                                                  ? default_schedule()
                                                  : parse_schedule(schedule_text);
            return run_converge(kind, p, dist_spec, schedule, format);
        }
        if (verify->parsed())
            return run_verify(verify_options, format);
    } catch (const SpecParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnknownDistributionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kDomain;
    }
    return kUsage;
}
