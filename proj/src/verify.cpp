#include "hilb3/verify.hpp"

#include <set>
#include <sstream>

#include "hilb3/error.hpp"
#include "hilb3/io.hpp"
#include "hilb3/localization.hpp"
#include "hilb3/parallel.hpp"
#include "hilb3/partitions.hpp"
#include "hilb3/series.hpp"

namespace hilb3 {

namespace {

void expect(VerificationOutcome& out, const std::string& id, const std::string& expected, const std::string& actual)
{
    ++out.cases_checked;
    if (expected != actual)
        out.failures.push_back({id, expected, actual});
}

std::string str(bool b) { return b ? "true" : "false"; }

std::string signed_count(int n, const mpz_class& count)
{
    mpz_class v = n % 2 == 0 ? count : mpz_class(-count);
    return v.get_str();
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"count", "parity", "cone", "diagonal", "strata", "fnu"};
    return names;
}

const std::vector<TangentReport>& Verifier::reports(int n)
{
    auto it = reports_.find(n);
    if (it == reports_.end()) {
        auto computed = parallel_map(enumerate_ideals(n), tangent_report, threads_);
        it = reports_.emplace(n, std::move(computed)).first;
    }
    return it->second;
}

VerificationOutcome Verifier::run(std::string_view suite, int max_n)
{
    if (max_n < 0)
        throw error("max-n must be nonnegative");
    if (suite == "count")
        return count(max_n);
    if (suite == "parity" || suite == "cone" || suite == "diagonal")
        return tangent_flag(suite, max_n);
    if (suite == "strata")
        return strata(max_n);
    if (suite == "fnu")
        return fnu(max_n);
    throw error("unknown suite '" + std::string(suite) + "'");
}

std::vector<VerificationOutcome> Verifier::run_all(int max_n)
{
    std::vector<VerificationOutcome> out;
    for (const auto& name : suite_names())
        out.push_back(run(name, max_n));
    return out;
}

VerificationOutcome Verifier::count(int max_n)
{
    VerificationOutcome out{"count", max_n, 0, {}};
    auto macmahon = macmahon_series(max_n);
    for (int n = 0; n <= max_n; ++n) {
        auto partitions = enumerate_partitions(n);
        std::string id = "n=" + std::to_string(n);
        expect(out, id + " enumeration vs macmahon", macmahon[n].get_str(), std::to_string(partitions.size()));
        expect(out, id + " partition_count vs macmahon", macmahon[n].get_str(), partition_count(n).get_str());

        std::set<PlanePartition> distinct(partitions.begin(), partitions.end());
        expect(out, id + " distinct", std::to_string(partitions.size()), std::to_string(distinct.size()));

        std::size_t round_trip_failures = 0;
        for (const auto& pp : partitions) {
            auto ideal = to_ideal(pp);
            if (from_ideal(ideal) != pp || to_ideal(from_ideal(ideal)) != ideal ||
                ideal.colength() != static_cast<std::size_t>(n))
                ++round_trip_failures;
        }
        expect(out, id + " round trip failures", "0", std::to_string(round_trip_failures));
    }
    return out;
}

VerificationOutcome Verifier::tangent_flag(std::string_view suite, int max_n)
{
    VerificationOutcome out{std::string(suite), max_n, 0, {}};
    for (int n = 1; n <= max_n; ++n)
        for (const auto& report : reports(n)) {
            std::string id = "n=" + std::to_string(n) + " ideal=" + io::format_ideal(report.ideal);
            bool flag = suite == "parity" ? report.parity_ok : suite == "cone" ? report.cone_ok : report.diagonal_free;
            expect(out, id, "true", str(flag));
        }
    return out;
}

VerificationOutcome Verifier::strata(int max_n)
{
    VerificationOutcome out{"strata", max_n, 0, {}};
    for (long chi = -5; chi <= 5; ++chi) {
        auto dt = dt_series(chi, max_n);
        for (int n = 0; n <= max_n; ++n)
            expect(out, "chi=" + std::to_string(chi) + " n=" + std::to_string(n) + " stratification vs M(-t)^chi",
                   dt[n].get_str(), stratification_sum(chi, n).get_str());
    }

    // Additivity over the split "z in I" / "z not in I".
    auto planar = [](const MonomialIdeal& I) { return I.contains({0, 0, 1}); };
    auto rest = [&](const MonomialIdeal& I) { return !planar(I); };
    for (int n = 1; n <= max_n; ++n) {
        long whole = 0, a = 0, b = 0;
        std::size_t count_a = 0, count_b = 0;
        for (const auto& report : reports(n)) {
            int sign = report.dim % 2 == 0 ? 1 : -1;
            whole += sign;
            if (planar(report.ideal)) {
                a += sign;
                ++count_a;
            } else {
                b += sign;
                ++count_b;
            }
        }
        std::string id = "n=" + std::to_string(n);
        expect(out, id + " additivity", std::to_string(whole), std::to_string(a + b));
        expect(out, id + " planar stratum", signed_count(n, count_a), std::to_string(a));
        expect(out, id + " complement stratum", signed_count(n, count_b), std::to_string(b));
        expect(out, id + " stratum api", std::to_string(a), std::to_string(weighted_euler_stratum(n, planar, threads_)));
        expect(out, id + " complement api", std::to_string(b), std::to_string(weighted_euler_stratum(n, rest, threads_)));
    }
    return out;
}

VerificationOutcome Verifier::fnu(int max_n)
{
    VerificationOutcome out{"fnu", max_n, 0, {}};
    auto dt = dt_series(1, max_n);
    for (int n = 0; n <= max_n; ++n) {
        std::string id = "n=" + std::to_string(n);
        long total = 1;
        std::vector<Weight> all_weights;
        if (n > 0) {
            total = 0;
            for (const auto& report : reports(n)) {
                total += report.dim % 2 == 0 ? 1 : -1;
                for (const auto& [w, mult] : report.character.entries())
                    all_weights.push_back(w);
            }
        }
        expect(out, id + " weighted euler vs (-1)^n p_n", signed_count(n, partition_count(n)), std::to_string(total));
        expect(out, id + " weighted euler vs M(-t)", dt[n].get_str(), std::to_string(total));
        expect(out, id + " localization api", std::to_string(total),
               std::to_string(weighted_euler_hilb(n, threads_).weighted_euler));

        std::string generic = "found";
        try {
            auto lambda = generic_subtorus(all_weights);
            for (const auto& w : all_weights)
                if (lambda.pairing(w) == 0)
                    generic = "degenerate";
        } catch (const error& e) {
            generic = e.what();
        }
        expect(out, id + " common generic subtorus", "found", generic);
    }
    return out;
}

std::string format_outcomes_text(const std::vector<VerificationOutcome>& outcomes)
{
    std::ostringstream out;
    for (const auto& o : outcomes) {
        out << "suite " << o.suite << " max_n=" << o.max_n << " cases=" << o.cases_checked
            << " failures=" << o.failures.size() << (o.ok() ? " PASS" : " FAIL") << '\n';
        for (const auto& f : o.failures)
            out << "  " << f.case_id << ": expected " << f.expected << ", got " << f.actual << '\n';
    }
    return out.str();
}

std::string format_outcomes_json(const std::vector<VerificationOutcome>& outcomes)
{
    std::ostringstream out;
    for (const auto& o : outcomes) {
        io::json rec;
        rec["suite"] = o.suite;
        rec["max_n"] = o.max_n;
        rec["cases_checked"] = o.cases_checked;
        io::json failures = io::json::array();
        for (const auto& f : o.failures)
            failures.push_back({{"case", f.case_id}, {"expected", f.expected}, {"actual", f.actual}});
        rec["failures"] = std::move(failures);
        out << rec.dump() << '\n';
    }
    return out.str();
}

} // namespace hilb3
