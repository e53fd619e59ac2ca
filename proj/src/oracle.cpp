#include "momentsum/oracle.hpp"

#include <cmath>
#include <vector>

#include "momentsum/errors.hpp"

namespace momentsum {

Rat brute_force_moment(int p, int n, const MomentAssignment& moments,
                       long long tuple_budget)
{
    if (p < 1 || n < 1)
        throw DomainError("brute force requires p >= 1 and n >= 1");
    Int tuples = pow_int(Int(n), p);
    if (tuples > tuple_budget)
        throw BudgetExceededError(tuples.str(), tuple_budget);

    std::vector<Rat> mu(p + 1);
    for (int k = 1; k <= p; ++k)
        mu[k] = moments.require(k);

    std::vector<int> digits(p, 0);  // current tuple, indices 0..n-1
    std::vector<int> occurrences(n, 0);
    Rat total = 0;
    while (true) {
        for (int d = 0; d < p; ++d)
            ++occurrences[digits[d]];
        Rat product = 1;
        for (int v = 0; v < n; ++v) {
            if (occurrences[v] > 0) {
                product *= mu[occurrences[v]];
                occurrences[v] = 0;
            }
        }
        total += product;

        int pos = p - 1;
        while (pos >= 0 && digits[pos] == n - 1)
            digits[pos--] = 0;
        if (pos < 0)
            break;
        ++digits[pos];
    }
    return total;
}

namespace {

double int_pow(double base, int exp)
{
    double result = 1.0;
    for (int i = 0; i < exp; ++i)
        result *= base;
    return result;
}

}  // namespace

McEstimate monte_carlo_moment(const MomentProvider& dist, int n, int p,
                              std::uint64_t samples, std::uint64_t seed)
{
    if (n < 1 || p < 1)
        throw DomainError("monte carlo requires p >= 1 and n >= 1");
    if (samples < 2)
        throw DomainError("monte carlo needs at least 2 samples");

    Sampler sampler(dist, seed);
    double mean = 0.0;
    double m2 = 0.0;  // Welford
    for (std::uint64_t i = 0; i < samples; ++i) {
        double sum = 0.0;
        for (int j = 0; j < n; ++j)
            sum += sampler.next();
        double statistic = int_pow(sum, p);
        double delta = statistic - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (statistic - mean);
    }

    McEstimate estimate;
    estimate.mean = mean;
    estimate.std_error = std::sqrt(m2 / static_cast<double>(samples - 1) /
                                   static_cast<double>(samples));
    estimate.samples = samples;
    estimate.seed = seed;
    return estimate;
}

}  // namespace momentsum
