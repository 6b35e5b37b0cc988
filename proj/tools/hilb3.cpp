// hilb3: command-line front end for the Hilbert-scheme localization engine.
//
// Exit status: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hilb3/critical_locus.hpp"
#include "hilb3/error.hpp"
#include "hilb3/io.hpp"
#include "hilb3/localization.hpp"
#include "hilb3/partitions.hpp"
#include "hilb3/series.hpp"
#include "hilb3/tangent.hpp"
#include "hilb3/verify.hpp"

namespace {

using hilb3::io::json;

constexpr int kUsageError = 2;

struct Options {
    std::string format = "json";
    int threads = -1;

    int n = 0;
    bool count_only = false;
    bool per_point = false;

    std::string ideal;
    int tangent_n = -1;

    long chi = 1;
    int order = 10;
    std::string kind = "dt";

    std::string poly_file;
    std::string poly_expr;
    std::string weights;

    std::string suite = "all";
    int max_n = 8;
};

unsigned thread_count(const Options& opt)
{
    if (opt.threads >= 0)
        return static_cast<unsigned>(opt.threads);
    if (const char* env = std::getenv("HILB3_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v >= 0)
                return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        throw hilb3::error("HILB3_THREADS must be a nonnegative integer, got '" + std::string(env) + "'");
    }
    return 1;
}

int cmd_partitions(const Options& opt)
{
    if (opt.count_only) {
        auto count = hilb3::partition_count(opt.n).get_str();
        if (opt.format == "csv")
            std::cout << "n,count\n" << opt.n << ',' << count << '\n';
        else
            std::cout << count << '\n';
        return 0;
    }
    if (opt.format == "csv")
        std::cout << "index,generators\n";
    std::size_t index = 0;
    hilb3::for_each_partition(opt.n, [&](const hilb3::PlanePartition& pp) {
        if (opt.format == "json") {
            std::cout << hilb3::io::partition_json(pp).dump() << '\n';
        } else if (opt.format == "csv") {
            std::cout << index << ',' << hilb3::io::format_ideal(hilb3::to_ideal(pp)) << '\n';
        } else {
            std::cout << json(pp.heights()).dump() << '\n';
        }
        ++index;
    });
    return 0;
}

void print_tangent(const hilb3::TangentReport& r, const std::string& format)
{
    if (format == "json") {
        std::cout << hilb3::io::tangent_json(r).dump() << '\n';
        return;
    }
    if (format == "csv") {
        std::cout << hilb3::io::format_ideal(r.ideal) << ',' << r.ideal.colength() << ',' << r.dim << ','
                  << r.parity_ok << ',' << r.cone_ok << ',' << r.diagonal_free << '\n';
        return;
    }
    std::cout << "ideal " << hilb3::io::format_ideal(r.ideal) << "\n  colength " << r.ideal.colength() << "\n  dim "
              << r.dim << "\n  weights";
    for (const auto& [w, mult] : r.character.entries()) {
        std::cout << " (" << w.w1 << ',' << w.w2 << ',' << w.w3 << ')';
        if (mult > 1)
            std::cout << '^' << mult;
    }
    std::cout << "\n  parity_ok " << r.parity_ok << "\n  cone_ok " << r.cone_ok << "\n  diagonal_free "
              << r.diagonal_free << '\n';
}

int cmd_tangent(const Options& opt)
{
    if (opt.ideal.empty() == (opt.tangent_n < 0))
        throw hilb3::error("tangent needs exactly one of --ideal or --n");
    if (opt.format == "csv")
        std::cout << "generators,n,dim,parity_ok,cone_ok,diagonal_free\n";
    if (!opt.ideal.empty()) {
        print_tangent(hilb3::tangent_report(hilb3::io::parse_ideal(opt.ideal)), opt.format);
        return 0;
    }
    auto reports = hilb3::Verifier(thread_count(opt)).reports(opt.tangent_n);
    for (const auto& r : reports)
        print_tangent(r, opt.format);
    return 0;
}

int cmd_localize(const Options& opt)
{
    auto result = hilb3::weighted_euler_hilb(opt.n, thread_count(opt));
    if (opt.format == "json") {
        std::cout << hilb3::io::localization_json(result, opt.per_point).dump() << '\n';
        return 0;
    }
    if (opt.format == "csv") {
        std::cout << "n,weighted_euler,fixed_point_count\n"
                  << result.n << ',' << result.weighted_euler << ',' << result.fixed_point_count << '\n';
        if (opt.per_point) {
            std::cout << "generators,sign\n";
            for (const auto& p : result.per_point)
                std::cout << hilb3::io::format_ideal(p.ideal) << ',' << p.sign << '\n';
        }
        return 0;
    }
    std::cout << "n " << result.n << "\nweighted_euler " << result.weighted_euler << "\nfixed_point_count "
              << result.fixed_point_count << '\n';
    if (opt.per_point)
        for (const auto& p : result.per_point)
            std::cout << (p.sign > 0 ? "+1 " : "-1 ") << hilb3::io::format_ideal(p.ideal) << '\n';
    return 0;
}

int cmd_series(const Options& opt)
{
    hilb3::IntSeries s = opt.kind == "dt"      ? hilb3::dt_series(opt.chi, opt.order)
                         : opt.kind == "euler" ? hilb3::euler_series(opt.chi, opt.order)
                                               : hilb3::macmahon_series(opt.order);
    auto format = opt.format == "json"  ? hilb3::io::SeriesFormat::json
                  : opt.format == "csv" ? hilb3::io::SeriesFormat::csv
                                        : hilb3::io::SeriesFormat::text;
    std::cout << hilb3::io::format_series(s, opt.kind, opt.kind == "macmahon" ? 1 : opt.chi, format);
    return 0;
}

int cmd_critical(const Options& opt)
{
    if (opt.poly_file.empty() == opt.poly_expr.empty())
        throw hilb3::error("critical needs exactly one of --poly FILE or --expr TEXT");
    std::string text = opt.poly_expr;
    if (!opt.poly_file.empty()) {
        std::ifstream in(opt.poly_file);
        if (!in)
            throw hilb3::error("cannot read polynomial file '" + opt.poly_file + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    auto weights = hilb3::io::parse_int_list(opt.weights);
    auto f = hilb3::io::parse_polynomial(text, weights);

    json rec;
    rec["polynomial"] = hilb3::io::format_polynomial(f);
    rec["num_vars"] = f.num_vars();
    rec["weights"] = f.weights();
    rec["invariant"] = hilb3::is_invariant(f);
    rec["in_m_cubed"] = hilb3::in_m_cubed(f);
    rec["hessian_tangent_dim"] = hilb3::hessian_tangent_dim(f);
    try {
        rec["nu"] = hilb3::nu_isolated(f);
    } catch (const hilb3::error& e) {
        rec["nu"] = nullptr;
        rec["nu_error"] = e.what();
    }
    json partials = json::array();
    for (const auto& d : hilb3::jacobian_generators(f))
        partials.push_back(hilb3::io::format_polynomial(d));
    rec["jacobian"] = std::move(partials);

    if (opt.format == "json") {
        std::cout << rec.dump() << '\n';
    } else {
        for (const auto& [key, value] : rec.items())
            std::cout << key << (opt.format == "csv" ? "," : " ") << value.dump() << '\n';
    }
    return 0;
}

int cmd_verify(const Options& opt)
{
    hilb3::Verifier verifier(thread_count(opt));
    std::vector<hilb3::VerificationOutcome> outcomes;
    if (opt.suite == "all")
        outcomes = verifier.run_all(opt.max_n);
    else
        outcomes.push_back(verifier.run(opt.suite, opt.max_n));
    std::cout << (opt.format == "json" ? hilb3::format_outcomes_json(outcomes)
                                       : hilb3::format_outcomes_text(outcomes));
    for (const auto& o : outcomes)
        if (!o.ok())
            return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Degree-zero Donaldson-Thomas invariants of Hilbert schemes of points by torus localization"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--threads", opt.threads, "Worker threads (0 = auto; default HILB3_THREADS or 1)")
        ->check(CLI::NonNegativeNumber);

    auto* partitions = app.add_subcommand("partitions", "Enumerate plane partitions / monomial ideals of colength n");
    partitions->add_option("--n", opt.n, "Size")->required()->check(CLI::NonNegativeNumber);
    partitions->add_flag("--count-only", opt.count_only, "Print only the number of partitions");

    auto* tangent = app.add_subcommand("tangent", "Tangent-space character of Hilb^n(A^3) at a monomial ideal");
    tangent->add_option("--ideal", opt.ideal, "Generators, e.g. \"2,0,0;0,1,0;0,0,1\" or \"x^2;y;z\"");
    tangent->add_option("--n", opt.tangent_n, "Report every ideal of this colength")->check(CLI::PositiveNumber);

    auto* localize = app.add_subcommand("localize", "Weighted Euler characteristic of Hilb^n(A^3) by localization");
    localize->add_option("--n", opt.n, "Number of points")->required()->check(CLI::NonNegativeNumber);
    localize->add_flag("--per-point", opt.per_point, "List every fixed point with its sign");

    auto* series = app.add_subcommand("series", "Generating series M(t), M(t)^chi or M(-t)^chi");
    series->add_option("--chi", opt.chi, "Euler characteristic of the threefold");
    series->add_option("--order", opt.order, "Truncation order")->check(CLI::NonNegativeNumber);
    series->add_option("--kind", opt.kind, "Series kind")->check(CLI::IsMember({"dt", "euler", "macmahon"}));

    auto* critical = app.add_subcommand("critical", "Check the quasi-homogeneous critical-locus example");
    critical->add_option("--poly", opt.poly_file, "File containing the polynomial");
    critical->add_option("--expr", opt.poly_expr, "Polynomial given inline");
    critical->add_option("--weights", opt.weights, "Comma-separated integer weights, one per variable")->required();

    auto* verify = app.add_subcommand("verify", "Run invariant suites");
    std::vector<std::string> suites = hilb3::suite_names();
    suites.push_back("all");
    verify->add_option("--suite", opt.suite, "Suite to run")->check(CLI::IsMember(suites));
    verify->add_option("--max-n", opt.max_n, "Largest colength to check")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    // Series tables default to CSV; everything else to JSON lines.
    if (series->parsed() && app.get_option("--format")->count() == 0)
        opt.format = "csv";

    try {
        if (partitions->parsed())
            return cmd_partitions(opt);
        if (tangent->parsed())
            return cmd_tangent(opt);
        if (localize->parsed())
            return cmd_localize(opt);
        if (series->parsed())
            return cmd_series(opt);
        if (critical->parsed())
            return cmd_critical(opt);
        if (verify->parsed())
            return cmd_verify(opt);
    } catch (const hilb3::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}
