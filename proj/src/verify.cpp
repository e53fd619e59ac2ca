#include "momentsum/verify.hpp"

#include <random>

#include "momentsum/errors.hpp"
#include "momentsum/moment_poly.hpp"

namespace momentsum {

VerifyReport run_verification(const VerifyOptions& options)
{
    if (options.p_max < 1 || options.n_max < 1 || options.trials < 1)
        throw DomainError("verification grid bounds must be positive");

    std::mt19937_64 gen(options.seed);
    std::uniform_int_distribution<int> numerator(-9, 9);
    std::uniform_int_distribution<int> denominator(1, 9);

    VerifyReport report;
    for (int p = 1; p <= options.p_max; ++p) {
        MomentPoly expr = moment_of_sum(p, ExpansionMode::General);
        for (int n = 1; n <= options.n_max; ++n) {
            for (int trial = 0; trial < options.trials; ++trial) {
                std::vector<Rat> values;
                values.reserve(p);
                for (int k = 1; k <= p; ++k) {
                    int num = numerator(gen);
                    int den = denominator(gen);
                    values.emplace_back(num, den);
                }
                MomentAssignment assignment = MomentAssignment::from_list(values);

                Rat symbolic = evaluate(expr, n, assignment) + options.fault_offset;
                Rat brute = brute_force_moment(p, n, assignment, options.tuple_budget);
                ++report.checks;
                if (symbolic != brute)
                    report.failures.push_back(
                        {p, n, trial, std::move(values), symbolic, brute});
            }
        }
    }
    return report;
}

}  // namespace momentsum
