#include <doctest.h>

#include <random>

#include "wbu3/rational.hpp"

using namespace wbu3;

TEST_CASE("smallest_residue follows floor semantics") {
    CHECK(smallest_residue(10, 5) == 0);
    CHECK(smallest_residue(-1, 5) == 4);
    CHECK(smallest_residue(7, 5) == 2);
    CHECK(smallest_residue(0, 1) == 0);
    CHECK(smallest_residue(-13, 5) == 2);
    CHECK_THROWS_AS(smallest_residue(3, 0), std::domain_error);
}

TEST_CASE("smallest_residue range and divisibility over random inputs") {
    std::mt19937_64 rng(20240901);
    std::uniform_int_distribution<Int> js(-1'000'000, 1'000'000);
    std::uniform_int_distribution<Int> rs(1, 5000);
    for (int k = 0; k < 2000; ++k) {
        Int j = js(rng), r = rs(rng);
        Int s = smallest_residue(j, r);
        CHECK(s >= 0);
        CHECK(s < r);
        CHECK((j - s) % r == 0);
    }
}

TEST_CASE("rational arithmetic stays reduced and exact") {
    CHECK(Rational(1, 4) + Rational(1, 3) == Rational(7, 12));
    CHECK(Rational(2, 1).is_integer());
    CHECK(Rational(5, 6) < Rational(1));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK((Rational(3, 7) * Rational(7, 3)).is_integer());
    CHECK(Rational(5, 3) / Rational(5, 3) == Rational(1));
    CHECK(Rational(0, 17) == Rational(0));
    CHECK(Rational(0).str() == "0");
    CHECK(Rational(-7, 2).str() == "-7/2");
    CHECK(Rational(4, 2).str() == "2");
}

TEST_CASE("rational errors: zero denominator, division by zero, overflow") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    Rational huge(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(huge * Rational(8), std::overflow_error);
    CHECK_THROWS_AS(Rational(1, INT64_MAX) + Rational(1, INT64_MAX - 2),
                    std::overflow_error);
}

TEST_CASE("rational parse round-trips str()") {
    for (const char* text : {"0", "7/12", "-7/12", "41", "-3"}) {
        Rational r = Rational::parse(text);
        CHECK(r.str() == text);
    }
    CHECK(Rational::parse("2/4") == Rational(1, 2));
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2z"), std::invalid_argument);
}

TEST_CASE("field laws on random fractions") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<Int> nums(-500, 500);
    std::uniform_int_distribution<Int> dens(1, 500);
    auto rand_q = [&] { return Rational(nums(rng), dens(rng)); };
    for (int k = 0; k < 500; ++k) {
        Rational a = rand_q(), b = rand_q(), c = rand_q();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        if (!b.is_zero())
            CHECK(a / b * b == a);
        CHECK(gcd(a.num() < 0 ? -a.num() : a.num(), a.den()) == 1);
    }
}

TEST_CASE("mod_inverse and lcm basics") {
    CHECK(mod_inverse(5, 6) == 5);
    CHECK(mod_inverse(3, 7) == 5);
    CHECK(mod_inverse(7, 1) == 1);
    CHECK_THROWS_AS(mod_inverse(2, 4), std::domain_error);
    CHECK(lcm(4, 6) == 12);
    CHECK(lcm(1, 9) == 9);
    CHECK_THROWS_AS(lcm(INT64_MAX, INT64_MAX - 1), std::overflow_error);
}
