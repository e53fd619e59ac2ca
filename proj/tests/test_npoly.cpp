#include <doctest.h>

#include <random>
#include <stdexcept>

#include "momentsum/npoly.hpp"

using namespace momentsum;

namespace {

NPoly random_poly(std::mt19937_64& gen)
{
    std::uniform_int_distribution<int> deg(0, 6);
    std::uniform_int_distribution<int> coef(-10, 10);
    std::map<int, Int> coeffs;
    int terms = deg(gen);
    for (int i = 0; i <= terms; ++i)
        coeffs[deg(gen)] = coef(gen);
    return NPoly::from_coefficients(coeffs);
}

}  // namespace

TEST_CASE("construction and queries")
{
    NPoly zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(zero.content() == 0);

    NPoly c = NPoly::constant(5);
    CHECK(c.degree() == 0);
    CHECK(c.coefficient(0) == 5);

    CHECK(NPoly::constant(0).is_zero());

    NPoly p = NPoly::from_coefficients({{3, 1}, {2, -3}, {1, 2}, {0, 0}});
    CHECK(p.degree() == 3);
    CHECK(p.coefficient(0) == 0);
    CHECK(p.coefficient(2) == -3);
    CHECK(p.coefficients().size() == 3);  // zero entry dropped
}

TEST_CASE("arithmetic agrees with pointwise evaluation")
{
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 200; ++trial) {
        NPoly a = random_poly(gen);
        NPoly b = random_poly(gen);
        for (Int x : {Int(-3), Int(0), Int(1), Int(11)}) {
            CHECK((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
            CHECK((a - b).evaluate(x) == a.evaluate(x) - b.evaluate(x));
            CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
            CHECK((a * Int(4)).evaluate(x) == 4 * a.evaluate(x));
        }
    }
}

TEST_CASE("cancellation keeps the representation canonical")
{
    NPoly a = NPoly::from_coefficients({{2, 3}, {1, 1}});
    NPoly b = NPoly::from_coefficients({{2, -3}, {0, 2}});
    NPoly sum = a + b;
    CHECK(sum.coefficients().size() == 2);
    CHECK(sum.coefficient(2) == 0);
    CHECK(sum == NPoly::from_coefficients({{1, 1}, {0, 2}}));
    CHECK((a - a).is_zero());
    CHECK((a * Int(0)).is_zero());
}

TEST_CASE("exact division guards divisibility")
{
    NPoly p = NPoly::from_coefficients({{2, 6}, {1, -9}});
    CHECK(p.divided_exact(3) == NPoly::from_coefficients({{2, 2}, {1, -3}}));
    CHECK_THROWS_AS(p.divided_exact(2), std::logic_error);
    CHECK_THROWS_AS(p.divided_exact(0), std::logic_error);
}

TEST_CASE("rational and double evaluation")
{
    NPoly p = NPoly::from_coefficients({{2, 4}, {0, 1}});
    CHECK(p.evaluate(Rat(1, 2)) == Rat(2));
    CHECK(p.evaluate(0.5) == doctest::Approx(2.0));
    CHECK(NPoly().evaluate(Int(17)) == 0);
}
