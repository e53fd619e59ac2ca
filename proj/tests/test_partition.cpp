#include <doctest.h>

#include <set>
#include <vector>

#include "momentsum/errors.hpp"
#include "momentsum/partition.hpp"

using namespace momentsum;

namespace {

// Independent counting oracle: number of partitions of n with parts <= k,
// by the standard recurrence ways(n,k) = ways(n-k,k) + ways(n,k-1).
long long count_partitions_up_to(int n, int k)
{
    if (n == 0)
        return 1;
    if (n < 0 || k == 0)
        return 0;
    return count_partitions_up_to(n - k, k) + count_partitions_up_to(n, k - 1);
}

long long count_partitions(int n)
{
    return count_partitions_up_to(n, n);
}

std::vector<int> ones(int count)
{
    return std::vector<int>(count, 1);
}

}  // namespace

TEST_CASE("enumeration matches the worked lists")
{
    std::vector<Partition> three = enumerate_partitions(3);
    REQUIRE(three.size() == 3);
    CHECK(three[0].parts() == std::vector<int>{3});
    CHECK(three[1].parts() == std::vector<int>{2, 1});
    CHECK(three[2].parts() == std::vector<int>{1, 1, 1});

    std::vector<Partition> one = enumerate_partitions(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].parts() == std::vector<int>{1});

    CHECK(enumerate_partitions(6).size() == 11);
}

TEST_CASE("enumeration count agrees with the counting recurrence")
{
    for (int p = 1; p <= 15; ++p)
        CHECK(enumerate_partitions(p).size() ==
              static_cast<std::size_t>(count_partitions(p)));
}

TEST_CASE("enumeration order, uniqueness, and sums")
{
    for (int p = 1; p <= 12; ++p) {
        std::vector<Partition> all = enumerate_partitions(p);
        std::set<std::vector<int>> seen;
        for (std::size_t i = 0; i < all.size(); ++i) {
            int sum = 0;
            for (int part : all[i].parts())
                sum += part;
            CHECK(sum == p);
            CHECK(seen.insert(all[i].parts()).second);  // no duplicates
            if (i > 0)
                CHECK(all[i - 1].parts() > all[i].parts());  // decreasing lex
        }
    }
}

TEST_CASE("enumeration rejects bad orders")
{
    CHECK_THROWS_AS(enumerate_partitions(0), DomainError);
    CHECK_THROWS_AS(enumerate_partitions(-4), DomainError);
    CHECK_THROWS_AS(enumerate_partitions(kDefaultOrderCap + 1), DomainError);
    CHECK_NOTHROW(enumerate_partitions(kDefaultOrderCap + 1, kDefaultOrderCap + 1));
}

TEST_CASE("partition canonicalizes and validates")
{
    Partition p({1, 3, 2, 2});
    CHECK(p.parts() == std::vector<int>{3, 2, 2, 1});
    CHECK(p.order() == 8);
    CHECK(p.length() == 4);
    CHECK(p.has_odd_part());
    CHECK_FALSE(Partition({4, 2, 2}).has_odd_part());
    CHECK_THROWS_AS(Partition({}), DomainError);
    CHECK_THROWS_AS(Partition({2, 0}), DomainError);
    CHECK(Partition({2, 1}) == Partition({1, 2}));
}

TEST_CASE("multiplicity profiles")
{
    MultiplicityProfile all_ones = multiplicity_profile(Partition(ones(4)));
    CHECK(all_ones.distinct == 1);
    CHECK(all_ones.multiplicities == std::vector<int>{4});

    MultiplicityProfile mixed = multiplicity_profile(Partition({2, 2, 2, 1}));
    CHECK(mixed.distinct == 2);
    CHECK(mixed.multiplicities == std::vector<int>{3, 1});

    MultiplicityProfile single = multiplicity_profile(Partition({5}));
    CHECK(single.distinct == 1);
    CHECK(single.multiplicities == std::vector<int>{1});
}

TEST_CASE("falling factorial expansions")
{
    CHECK(falling_factorial(0) == NPoly::constant(1));
    CHECK(falling_factorial(1) == NPoly::variable());
    CHECK(falling_factorial(3) ==
          NPoly::from_coefficients({{3, 1}, {2, -3}, {1, 2}}));
}

TEST_CASE("term coefficients for the worked third-order expansion")
{
    CHECK(partition_coefficient(Partition({2, 1})) ==
          NPoly::from_coefficients({{2, 3}, {1, -3}}));
    CHECK(partition_coefficient(Partition({3})) == NPoly::variable());
    CHECK(partition_coefficient(Partition({1, 1, 1})) ==
          NPoly::from_coefficients({{3, 1}, {2, -3}, {1, 2}}));
}

TEST_CASE("coefficients over all partitions sum to n^p")
{
    // with every moment set to 1 the sum is n identical summands
    for (int p = 1; p <= 12; ++p) {
        std::vector<Partition> all = enumerate_partitions(p);
        for (int n = 1; n <= 8; ++n) {
            Int total = 0;
            for (const Partition& part : all)
                total += partition_coefficient(part).evaluate(Int(n));
            CHECK(total == pow_int(Int(n), p));
        }
    }
}

TEST_CASE("single-block and all-distinct coefficients")
{
    for (int p = 1; p <= 12; ++p)
        CHECK(partition_coefficient(Partition({p})) == NPoly::variable());
    for (int p = 1; p <= 10; ++p)
        CHECK(partition_coefficient(Partition(ones(p))) == falling_factorial(p));
}

TEST_CASE("coefficients vanish below the length and count above it")
{
    for (int p = 1; p <= 9; ++p) {
        for (const Partition& part : enumerate_partitions(p)) {
            NPoly coefficient = partition_coefficient(part);
            for (int n = 0; n < part.length(); ++n)
                CHECK(coefficient.evaluate(Int(n)) == 0);
            for (int n = part.length(); n <= part.length() + 10; ++n)
                CHECK(coefficient.evaluate(Int(n)) >= 0);
        }
    }
}
