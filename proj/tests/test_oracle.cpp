#include <doctest.h>

#include <cmath>
#include <random>

#include "momentsum/errors.hpp"
#include "momentsum/oracle.hpp"
#include "momentsum/verify.hpp"

using namespace momentsum;

namespace {

MomentAssignment random_assignment(int up_to, std::mt19937_64& gen)
{
    std::uniform_int_distribution<int> numerator(-9, 9);
    std::uniform_int_distribution<int> denominator(1, 9);
    MomentAssignment moments;
    for (int k = 1; k <= up_to; ++k) {
        int num = numerator(gen);
        int den = denominator(gen);
        moments.set(k, Rat(num, den));
    }
    return moments;
}

}  // namespace

TEST_CASE("one summand returns its own moment")
{
    std::mt19937_64 gen(3);
    for (int p = 1; p <= 6; ++p) {
        MomentAssignment moments = random_assignment(p, gen);
        CHECK(brute_force_moment(p, 1, moments) == moments.require(p));
    }
}

TEST_CASE("two coins enumerate to 3/2")
{
    // tuples (1,1) (1,2) (2,1) (2,2) give u2 + u1^2 + u1^2 + u2
    MomentAssignment coin;
    coin.set(1, Rat(1, 2));
    coin.set(2, Rat(1, 2));
    CHECK(brute_force_moment(2, 2, coin) == Rat(3, 2));
}

TEST_CASE("brute force agrees with the symbolic path")
{
    std::mt19937_64 gen(5);
    MomentPoly third = moment_of_sum(3, ExpansionMode::General);
    for (int trial = 0; trial < 10; ++trial) {
        MomentAssignment moments = random_assignment(3, gen);
        CHECK(brute_force_moment(3, 3, moments) == evaluate(third, 3, moments));
    }
    for (int p = 1; p <= 5; ++p) {
        MomentPoly expr = moment_of_sum(p, ExpansionMode::General);
        for (int n = 1; n <= 4; ++n) {
            for (int trial = 0; trial < 10; ++trial) {
                MomentAssignment moments = random_assignment(p, gen);
                CHECK(brute_force_moment(p, n, moments) == evaluate(expr, n, moments));
            }
        }
    }
}

TEST_CASE("tuple budget is enforced")
{
    MomentAssignment moments = MomentAssignment::all_equal(4, 1);
    try {
        brute_force_moment(4, 100, moments);
        FAIL("expected BudgetExceededError");
    } catch (const BudgetExceededError& e) {
        CHECK(std::string(e.what()).find("100000000") != std::string::npos);
    }
    // the budget is a parameter: 3^2 tuples fail at 8 and pass at 9
    CHECK_THROWS_AS(brute_force_moment(2, 3, moments, 8), BudgetExceededError);
    CHECK(brute_force_moment(2, 3, moments, 9) == Rat(pow_int(3, 2)));
    CHECK_THROWS_AS(brute_force_moment(0, 2, moments), DomainError);
}

TEST_CASE("verification grid passes and is deterministic")
{
    VerifyOptions options;
    options.p_max = 4;
    options.n_max = 4;
    options.trials = 8;
    VerifyReport report = run_verification(options);
    CHECK(report.passed());
    CHECK(report.checks == 4 * 4 * 8);
}

TEST_CASE("fault injection reports the first failing cell")
{
    VerifyOptions options;
    options.p_max = 2;
    options.n_max = 2;
    options.trials = 3;
    options.fault_offset = 1;
    VerifyReport report = run_verification(options);
    CHECK_FALSE(report.passed());
    CHECK(report.failures.size() == static_cast<std::size_t>(report.checks));
    const VerifyFailure& first = report.failures.front();
    CHECK(first.p == 1);
    CHECK(first.n == 1);
    CHECK(first.trial == 0);
    CHECK(first.moments.size() == 1);
    CHECK(first.symbolic == first.brute_force + 1);
}

TEST_CASE("degenerate monte carlo is exact")
{
    McEstimate estimate =
        monte_carlo_moment(MomentProvider::constant(1), 5, 2, 1000, 1);
    CHECK(estimate.mean == 25.0);
    CHECK(estimate.std_error == 0.0);
    CHECK(estimate.samples == 1000);
}

TEST_CASE("monte carlo matches the exact second moment")
{
    McEstimate estimate =
        monte_carlo_moment(MomentProvider::rademacher(), 10, 2, 200'000, 99);
    CHECK(std::abs(estimate.mean - 10.0) <= 5.0 * estimate.std_error);
}

TEST_CASE("monte carlo matches the exact fourth moment of a uniform sum")
{
    MomentAssignment moments = moments_up_to(MomentProvider::uniform(-1, 1), 4);
    Rat exact = evaluate(moment_of_sum(4, ExpansionMode::Symmetric), 30, moments);
    CHECK(exact == 296);
    McEstimate estimate =
        monte_carlo_moment(MomentProvider::uniform(-1, 1), 30, 4, 100'000, 7);
    CHECK(std::abs(estimate.mean - 296.0) <= 5.0 * estimate.std_error);
}

TEST_CASE("monte carlo is bit-deterministic")
{
    McEstimate a = monte_carlo_moment(MomentProvider::exponential(1), 4, 3, 20'000, 555);
    McEstimate b = monte_carlo_moment(MomentProvider::exponential(1), 4, 3, 20'000, 555);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);

    McEstimate c = monte_carlo_moment(MomentProvider::exponential(1), 4, 3, 20'000, 556);
    CHECK(a.mean != c.mean);
}

TEST_CASE("doubling the sample count shrinks the standard error like sqrt(2)")
{
    double ratio_sum = 0.0;
    const int pairs = 15;
    for (int i = 0; i < pairs; ++i) {
        McEstimate small = monte_carlo_moment(MomentProvider::rademacher(), 5, 2,
                                              4000, 1000 + i);
        McEstimate big = monte_carlo_moment(MomentProvider::rademacher(), 5, 2,
                                            8000, 2000 + i);
        ratio_sum += small.std_error / big.std_error;
    }
    double average = ratio_sum / pairs;
    CHECK(average >= 1.2);
    CHECK(average <= 1.7);
}

TEST_CASE("monte carlo input validation")
{
    CHECK_THROWS_AS(
        monte_carlo_moment(MomentProvider::explicit_moments({Rat(1)}), 2, 2, 100, 1),
        NotSamplableError);
    CHECK_THROWS_AS(monte_carlo_moment(MomentProvider::rademacher(), 2, 2, 1, 1),
                    DomainError);
    CHECK_THROWS_AS(monte_carlo_moment(MomentProvider::rademacher(), 0, 2, 100, 1),
                    DomainError);
}
