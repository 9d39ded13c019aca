#include <doctest.h>

#include "charcond/cyclotomic.hpp"
#include "charcond/fields.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

using namespace charcond::cyclo;
using Term = CyclotomicInteger::Term;
using Terms = std::vector<Term>;

namespace {

// Independent numeric oracle: evaluate a term list in C with long doubles.
std::complex<long double> numeric(long long n, const Terms& terms) {
    const long double pi = std::acos(-1.0L);
    std::complex<long double> s{0.0L, 0.0L};
    for (const auto& [e, c] : terms) {
        long double x = 2.0L * pi * static_cast<long double>(e) / static_cast<long double>(n);
        s += c.convert_to<long double>() * std::complex<long double>(std::cos(x), std::sin(x));
    }
    return s;
}

std::complex<long double> numeric(const CyclotomicInteger& a) {
    return numeric(a.modulus(), a.terms());
}

bool close(std::complex<long double> a, std::complex<long double> b) {
    return std::abs(a - b) < 1e-9L;
}

Terms random_terms(std::mt19937& rng, long long n, int max_terms) {
    std::uniform_int_distribution<int> nt(1, max_terms);
    std::uniform_int_distribution<long long> ex(0, n - 1);
    std::uniform_int_distribution<int> co(-5, 5);
    Terms terms;
    int k = nt(rng);
    for (int i = 0; i < k; ++i) terms.push_back({ex(rng), co(rng)});
    return terms;
}

CyclotomicInteger random_element(std::mt19937& rng, long long n, int max_terms = 4) {
    return CyclotomicInteger::make(n, random_terms(rng, n, max_terms));
}

const std::vector<long long> kCanonicalModuli = {1,  3,  4,  5,  7,  8,  9,  12, 13,
                                                 15, 16, 20, 21, 24, 25, 27, 28, 33,
                                                 35, 36, 40, 44, 45, 48, 60};

}  // namespace

TEST_SUITE("cyclotomic") {

TEST_CASE("roots of unity normalize and reduce") {
    RootOfUnity r(12, 14);
    CHECK(r.modulus == 12);
    CHECK(r.exponent == 2);
    CHECK(r.order() == 6);
    CHECK(r.reduced() == RootOfUnity(6, 1));
    CHECK(RootOfUnity(5, -1) == RootOfUnity(5, 4));
    CHECK(RootOfUnity(7, 0).order() == 1);
    CHECK_THROWS_AS(RootOfUnity(0, 1), std::invalid_argument);
}

TEST_CASE("construction lands on the canonical basis") {
    // zeta_5^4 is outside the basis {0,1,2,3}; zeta_5^4 = -1-z-z^2-z^3.
    auto a = CyclotomicInteger::make(5, {{1, 1}, {4, 1}});
    CHECK(a.modulus() == 5);
    CHECK(a.terms() == Terms{{0, -1}, {2, -1}, {3, -1}});
    CHECK(close(numeric(a), numeric(5, {{1, 1}, {4, 1}})));

    // zeta_12^2 has both CRT components outside the basis; it rewrites to 1+zeta_12^4.
    auto b = CyclotomicInteger::root(12, 2);
    CHECK(b.terms() == Terms{{0, 1}, {4, 1}});
    CHECK(close(numeric(b), numeric(12, {{2, 1}})));

    // The full orbit sums collapse to rationals.
    auto c = CyclotomicInteger::make(5, {{1, 1}, {2, 1}, {3, 1}, {4, 1}});
    CHECK(c.is_rational());
    CHECK(c.rational_value() == -1);
    auto d = CyclotomicInteger::make(5, {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}});
    CHECK(d.is_zero());

    CHECK_THROWS_AS(CyclotomicInteger::make(0, {}), std::invalid_argument);
}

TEST_CASE("even moduli fold to canonical form") {
    // zeta_6 = -zeta_3^2 = 1 + zeta_3, stored at modulus 3.
    auto a = CyclotomicInteger::root(6, 1);
    CHECK(a.modulus() == 3);
    CHECK(a.terms() == Terms{{0, 1}, {1, 1}});
    CHECK(close(numeric(a), numeric(6, {{1, 1}})));

    // zeta_2 = -1, stored at modulus 1.
    auto b = CyclotomicInteger::root(2, 1);
    CHECK(b.modulus() == 1);
    CHECK(b.rational_value() == -1);

    // The same value reached through different presentations compares equal.
    CHECK(value_equal(CyclotomicInteger::root(6, 1), CyclotomicInteger::root(12, 2)));
    CHECK(CyclotomicInteger::make(18, {{3, 1}}) == CyclotomicInteger::root(6, 1).embed(9));
}

TEST_CASE("canonical form is a fixed point and matches the numeric oracle") {
    std::mt19937 rng(20260822);
    for (long long n : kCanonicalModuli) {
        for (int trial = 0; trial < 8; ++trial) {
            Terms raw = random_terms(rng, n, 5);
            auto a = CyclotomicInteger::make(n, raw);
            CHECK(close(numeric(a), numeric(n, raw)));
            CHECK(CyclotomicInteger::make(n, a.terms()) == a);
        }
    }
}

TEST_CASE("arithmetic agrees with a dense convolution oracle") {
    std::mt19937 rng(7);
    for (long long n : {5LL, 8LL, 12LL, 15LL, 21LL, 36LL}) {
        for (int trial = 0; trial < 12; ++trial) {
            auto a = random_element(rng, n);
            auto b = random_element(rng, n);
            Terms conv;
            for (const auto& [ea, ca] : a.terms())
                for (const auto& [eb, cb] : b.terms()) conv.push_back({(ea + eb) % n, ca * cb});
            CHECK(a * b == CyclotomicInteger::make(n, conv));
            CHECK(close(numeric(a * b), numeric(a) * numeric(b)));
            CHECK(close(numeric(a + b), numeric(a) + numeric(b)));
            CHECK(close(numeric(a - b), numeric(a) - numeric(b)));
        }
    }
}

TEST_CASE("mixed moduli refuse silent coercion") {
    auto a = CyclotomicInteger::root(3, 1);
    auto b = CyclotomicInteger::root(5, 1);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    auto [la, lb] = lift_to_common(a, b);
    CHECK(la.modulus() == 15);
    CHECK(lb.modulus() == 15);
    CHECK(close(numeric(la * lb), numeric(a) * numeric(b)));
}

TEST_CASE("embed preserves value, conductor, and products") {
    std::mt19937 rng(11);
    for (long long n : {3LL, 5LL, 8LL, 12LL, 15LL}) {
        for (long long m : {3LL, 4LL, 5LL, 7LL}) {
            long long target = lcm_ll(n, m);
            for (int trial = 0; trial < 6; ++trial) {
                auto a = random_element(rng, n);
                auto lifted = a.embed(target);
                CHECK(close(numeric(lifted), numeric(a)));
                CHECK(lifted.conductor() == a.conductor());
                auto b = random_element(rng, n);
                CHECK((a * b).embed(target) == lifted * b.embed(target));
            }
        }
    }
    CHECK_THROWS_AS(CyclotomicInteger::root(5, 1).embed(12), std::invalid_argument);
}

TEST_CASE("galois maps are ring homomorphisms") {
    std::mt19937 rng(13);
    for (long long n : {5LL, 12LL, 15LL, 16LL, 35LL}) {
        std::vector<long long> units;
        for (long long s = 1; s < n; ++s)
            if (gcd_ll(s, n) == 1) units.push_back(s);
        std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);
        for (int trial = 0; trial < 10; ++trial) {
            long long s = units[pick(rng)];
            auto a = random_element(rng, n);
            auto b = random_element(rng, n);
            CHECK(a.galois(s) * b.galois(s) == (a * b).galois(s));
            CHECK(a.galois(s) + b.galois(s) == (a + b).galois(s));
            CHECK(a.galois(1) == a);
            CHECK(a.fixed_by(s) == (a.galois(s) == a));
            CHECK(a.conjugate().conjugate() == a);
            CHECK(close(numeric(a.conjugate()), std::conj(numeric(a))));
        }
    }
    CHECK_THROWS_AS(CyclotomicInteger::root(12, 1).galois(2), std::invalid_argument);
}

TEST_CASE("powers match repeated multiplication") {
    std::mt19937 rng(17);
    auto a = random_element(rng, 15);
    auto acc = CyclotomicInteger::from_integer(1).embed(15);
    for (unsigned k = 0; k <= 6; ++k) {
        CHECK(a.pow(k) == acc);
        acc = acc * a;
    }
}

TEST_CASE("root-of-unity recognition") {
    auto r = CyclotomicInteger::root(12, 2).as_root_of_unity();
    REQUIRE(r.has_value());
    CHECK(r->sign == 1);
    CHECK(r->root == RootOfUnity(6, 1));

    // -zeta_8 is itself a root of unity, so the plus presentation wins.
    auto m = (-CyclotomicInteger::root(8, 1)).as_root_of_unity();
    REQUIRE(m.has_value());
    CHECK(m->sign == 1);
    CHECK(m->root == RootOfUnity(8, 5));

    // -zeta_3 has order 6 and is not a zeta_3 power, so the sign is needed.
    auto neg = (-CyclotomicInteger::root(3, 1)).as_root_of_unity();
    REQUIRE(neg.has_value());
    CHECK(neg->sign == -1);
    CHECK(neg->root == RootOfUnity(3, 1));

    auto one = CyclotomicInteger::from_integer(-1).as_root_of_unity();
    REQUIRE(one.has_value());
    CHECK(one->sign == -1);
    CHECK(one->root == RootOfUnity(1, 0));

    CHECK(!CyclotomicInteger::make(5, {{1, 1}, {4, 1}}).as_root_of_unity().has_value());
    CHECK(!CyclotomicInteger::zero().as_root_of_unity().has_value());
    CHECK(!(CyclotomicInteger::root(3, 1) * CyclotomicInteger::from_integer(2).embed(3))
               .as_root_of_unity()
               .has_value());
}

TEST_CASE("conductors of pinned values") {
    CHECK(CyclotomicInteger::zero().conductor() == 1);
    CHECK(CyclotomicInteger::from_integer(7).conductor() == 1);
    CHECK(CyclotomicInteger::make(8, {{1, 1}, {7, 1}}).conductor() == 8);   // sqrt(2)
    CHECK(CyclotomicInteger::make(5, {{1, 1}, {4, 1}}).conductor() == 5);   // golden ratio part
    CHECK(CyclotomicInteger::root(12, 1).conductor() == 12);
    CHECK(CyclotomicInteger::root(12, 2).conductor() == 3);   // zeta_6 lies in Q(zeta_3)
    CHECK(CyclotomicInteger::root(12, 3).conductor() == 4);   // i
    CHECK(CyclotomicInteger::root(12, 4).conductor() == 3);
    CHECK(CyclotomicInteger::root(12, 6).conductor() == 1);   // -1
    // A conductor is never 2 mod 4.
    CHECK(CyclotomicInteger::root(6, 1).conductor() == 3);
}

TEST_CASE("the two conductor routes agree") {
    std::mt19937 rng(19);
    MembershipCache cache;
    for (long long n : {1LL, 4LL, 5LL, 9LL, 12LL, 15LL, 16LL, 21LL, 24LL, 36LL}) {
        for (int trial = 0; trial < 15; ++trial) {
            auto a = random_element(rng, n, 5);
            CAPTURE(n);
            CAPTURE(a.encode());
            CHECK(a.conductor() == conductor_by_membership(a, cache));
        }
    }
}

TEST_CASE("subfield membership oracle on hand-checked cases") {
    auto sqrt5_part = CyclotomicInteger::make(5, {{1, 1}, {4, 1}}).embed(15);
    CHECK(subfield_membership_oracle(sqrt5_part, 5));
    CHECK(subfield_membership_oracle(sqrt5_part, 15));
    CHECK(!subfield_membership_oracle(sqrt5_part, 3));
    CHECK(!subfield_membership_oracle(sqrt5_part, 1));
    CHECK_THROWS_AS(subfield_membership_oracle(sqrt5_part, 7), std::invalid_argument);

    auto third = CyclotomicInteger::root(3, 1).embed(12);
    CHECK(subfield_membership_oracle(third, 3));
    CHECK(subfield_membership_oracle(third, 6));   // Q(zeta_6) = Q(zeta_3)
    CHECK(!subfield_membership_oracle(third, 4));
}

TEST_CASE("field handles compare by the field, not the presentation") {
    auto sqrt2_at8 = CyclotomicInteger::make(8, {{1, 1}, {7, 1}});
    auto sqrt2_at24 = CyclotomicInteger::make(24, {{3, 1}, {21, 1}});
    CHECK(field_equal(field_of_element(sqrt2_at8), field_of_element(sqrt2_at24)));
    CHECK(!field_equal(field_of_element(sqrt2_at8), field_of_element(CyclotomicInteger::root(4, 1))));

    auto third_low = field_of_element(CyclotomicInteger::root(3, 1));
    auto third_high = field_of_element(CyclotomicInteger::root(3, 1).embed(12));
    CHECK(field_equal(third_low, third_high));
    CHECK(third_low.conductor == 3);
    CHECK(third_high.conductor == 3);

    auto both = field_of_set({CyclotomicInteger::root(3, 1).embed(12), CyclotomicInteger::root(4, 1).embed(12)});
    CHECK(both.conductor == 12);
    CHECK(both.stabilizer == std::vector<long long>{1});

    auto empty = field_of_set({});
    CHECK(empty.conductor == 1);
    CHECK(field_equal(empty, field_of_element(CyclotomicInteger::from_integer(42))));
}

TEST_CASE("degree bookkeeping inside the conductor field") {
    CHECK(index_in_conductor_field(CyclotomicInteger::make(5, {{1, 1}, {4, 1}})) == 2);
    CHECK(index_in_conductor_field(CyclotomicInteger::root(5, 1)) == 1);
    CHECK(index_in_conductor_field(CyclotomicInteger::root(3, 1).embed(15)) == 1);
    CHECK(index_in_conductor_field(CyclotomicInteger::from_integer(3)) == 1);
    // sqrt(2) seen inside Q(zeta_24): stabilizer has order 4, index in Q(zeta_8) is 2.
    CHECK(index_in_conductor_field(CyclotomicInteger::make(24, {{3, 1}, {21, 1}})) == 2);
}

}  // TEST_SUITE
