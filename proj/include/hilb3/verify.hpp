#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hilb3/tangent.hpp"

namespace hilb3 {

struct VerificationFailure {
    std::string case_id;
    std::string expected;
    std::string actual;
};

struct VerificationOutcome {
    std::string suite;
    int max_n = 0;
    std::size_t cases_checked = 0;
    std::vector<VerificationFailure> failures;

    bool ok() const noexcept { return failures.empty(); }
};

/// Suite names accepted by Verifier::run, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Runs the invariant suites. Tangent reports are computed once per colength
/// and shared between the parity, cone and diagonal suites.
class Verifier {
public:
    explicit Verifier(unsigned threads = 1) : threads_(threads) {}

    /// Throws hilb3::error for an unknown suite or negative max_n.
    /// "all" is not accepted here; see run_all.
    VerificationOutcome run(std::string_view suite, int max_n);
    std::vector<VerificationOutcome> run_all(int max_n);

    /// Reports for every ideal of colength n (n >= 1), in enumeration order.
    const std::vector<TangentReport>& reports(int n);

private:
    VerificationOutcome count(int max_n);
    VerificationOutcome tangent_flag(std::string_view suite, int max_n);
    VerificationOutcome strata(int max_n);
    VerificationOutcome fnu(int max_n);

    unsigned threads_;
    std::map<int, std::vector<TangentReport>> reports_;
};

std::string format_outcomes_text(const std::vector<VerificationOutcome>& outcomes);
std::string format_outcomes_json(const std::vector<VerificationOutcome>& outcomes);

} // namespace hilb3
