#include <doctest.h>

#include "charcond/ffield.hpp"
#include "charcond/fields.hpp"

#include <random>
#include <set>
#include <vector>

using namespace charcond::ffield;
using charcond::cyclo::CyclotomicInteger;
using charcond::cyclo::field_of_element;

TEST_SUITE("ffield") {

TEST_CASE("deterministic field presentations") {
    FiniteField f5(5, 1);
    CHECK(f5.size() == 5);
    CHECK(f5.modulus_polynomial() == std::vector<int>{0});  // the polynomial x
    CHECK(f5.generator() == 2);

    FiniteField f8(2, 3);
    CHECK(f8.modulus_polynomial() == std::vector<int>{1, 1, 0});  // x^3 + x + 1
    CHECK(f8.size() == 8);

    FiniteField f9(3, 2);
    CHECK(f9.modulus_polynomial() == std::vector<int>{1, 0});  // x^2 + 1
    CHECK(f9.generator() == 4);                                // 1 + t

    FiniteField f4(2, 2);
    CHECK(f4.modulus_polynomial() == std::vector<int>{1, 1});  // x^2 + x + 1
    CHECK(f4.trace(2) == 1);                                   // Tr(t) = t + t^2

    CHECK_THROWS_AS(FiniteField(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField(2, 25), std::invalid_argument);  // over the size cap
}

TEST_CASE("trace is the prime-field linear form") {
    std::mt19937 rng(29);
    for (auto [p, f] : std::vector<std::pair<long long, int>>{{2, 3}, {3, 2}, {5, 2}, {7, 1}}) {
        FiniteField field(p, f);
        CHECK(field.trace(0) == 0);
        CHECK(field.trace(1) == f % p);
        std::uniform_int_distribution<long long> el(0, field.size() - 1);
        for (int trial = 0; trial < 20; ++trial) {
            long long a = el(rng);
            long long b = el(rng);
            CHECK(field.trace(field.add(a, b)) == (field.trace(a) + field.trace(b)) % p);
            CHECK(field.trace(field.pow(a, p)) == field.trace(a));  // Frobenius invariance
        }
    }
}

TEST_CASE("generators, discrete logs, and squares") {
    for (auto [p, f] : std::vector<std::pair<long long, int>>{{13, 1}, {3, 2}, {5, 2}, {2, 4}}) {
        FiniteField field(p, f);
        long long q = field.size();
        long long g = field.generator();
        CHECK(field.pow(g, q - 1) == 1);
        for (long long r = 2; r < q - 1; ++r)
            if ((q - 1) % r == 0 && r * r <= q - 1)
                CHECK((field.pow(g, (q - 1) / r) != 1 || field.pow(g, r) != 1));

        // Discrete log inverts exponentiation.
        for (long long a = 1; a < q; ++a) CHECK(field.pow(g, field.discrete_log(a)) == a);

        // Squareness agrees with a brute-force table of squares.
        std::set<long long> squares;
        for (long long x = 1; x < q; ++x) squares.insert(field.mul(x, x));
        for (long long a = 1; a < q; ++a)
            CHECK(field.is_square(a) == (squares.count(a) > 0));
        CHECK_THROWS_AS(field.discrete_log(0), std::invalid_argument);
    }
}

TEST_CASE("gauss sums square to plus or minus q") {
    auto g5 = gauss_sum(5, 1);
    CHECK((g5 * g5).is_rational());
    CHECK((g5 * g5).rational_value() == 5);

    auto g3 = gauss_sum(3, 1);
    CHECK((g3 * g3).rational_value() == -3);

    auto g7 = gauss_sum(7, 1);
    CHECK((g7 * g7).rational_value() == -7);

    // Degree-two extension of F_3: the sum collapses to the rational 3.
    auto g9 = gauss_sum(3, 2);
    CHECK(g9.is_rational());
    CHECK(g9.rational_value() == 3);

    CHECK_THROWS_AS(gauss_sum(2, 1), std::invalid_argument);
}

TEST_CASE("gauss sums pin the quadratic subfield for q up to 49") {
    for (auto [p, f] : std::vector<std::pair<long long, int>>{{3, 1}, {5, 1}, {7, 1}, {3, 2},
                                                              {11, 1}, {13, 1}, {17, 1}, {19, 1},
                                                              {23, 1}, {5, 2}, {3, 3}, {29, 1},
                                                              {31, 1}, {37, 1}, {41, 1}, {43, 1},
                                                              {47, 1}, {7, 2}}) {
        CAPTURE(p);
        CAPTURE(f);
        long long q = 1;
        for (int i = 0; i < f; ++i) q *= p;
        auto g = gauss_sum(p, f);
        auto square = g * g;
        CHECK(square.is_rational());
        CHECK(square.rational_value() == (((q - 1) / 2) % 2 == 0 ? q : -q));
        // Odd-degree sums generate the quadratic subfield of Q(zeta_p);
        // even-degree sums are rational.
        long long expected_conductor = f % 2 == 0 ? 1 : p;
        CHECK(g.conductor() == expected_conductor);
        CHECK(field_of_element(g).conductor == expected_conductor);
    }
}

TEST_CASE("prime power recognition") {
    auto pp8 = as_prime_power(8);
    REQUIRE(pp8.has_value());
    CHECK(*pp8 == std::make_pair(2LL, 3));
    auto pp9 = as_prime_power(9);
    REQUIRE(pp9.has_value());
    CHECK(*pp9 == std::make_pair(3LL, 2));
    auto pp7 = as_prime_power(7);
    REQUIRE(pp7.has_value());
    CHECK(*pp7 == std::make_pair(7LL, 1));
    CHECK(!as_prime_power(12).has_value());
    CHECK(!as_prime_power(1).has_value());
    CHECK(!as_prime_power(0).has_value());
}

}  // TEST_SUITE
