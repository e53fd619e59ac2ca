#ifndef MOMENTSUM_ORACLE_HPP
#define MOMENTSUM_ORACLE_HPP

#include <cstdint>

#include "momentsum/distributions.hpp"
#include "momentsum/moment_poly.hpp"
#include "momentsum/numeric.hpp"

namespace momentsum {

// Keeps the exhaustive enumeration around ten seconds at desk scale.
inline constexpr long long kDefaultTupleBudget = 10'000'000;

// Exhaustive p-fold sum over all index tuples in {1..n}^p: per tuple,
// tally how often each index occurs and multiply the matching raw
// moments. Deliberately shares nothing with the partition machinery so
// the two paths check each other.
Rat brute_force_moment(int p, int n, const MomentAssignment& moments,
                       long long tuple_budget = kDefaultTupleBudget);

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;  // sample std dev of the statistic / sqrt(samples)
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

// Sample mean and standard error of S_n^p over `samples` independent
// realizations, each the sum of n fresh draws. Bit-identical output for
// identical inputs.
McEstimate monte_carlo_moment(const MomentProvider& dist, int n, int p,
                              std::uint64_t samples, std::uint64_t seed);

}  // namespace momentsum

#endif  // MOMENTSUM_ORACLE_HPP
