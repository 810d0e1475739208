#include "qr/fraction.hpp"

#include <doctest.h>

#include <random>

using namespace qr;

TEST_CASE("reduction and sign conventions") {
    CHECK(Fraction(2, 4) == Fraction(1, 2));
    CHECK(Fraction(-2, -4) == Fraction(1, 2));
    CHECK(Fraction(2, -4) == Fraction(-1, 2));
    CHECK(Fraction(0, -7) == Fraction(0, 1));
    CHECK(Fraction(-3, 0) == Fraction::infinity());
    CHECK(Fraction(5, 0).is_infinity());
    CHECK_THROWS_AS(Fraction(0, 0), std::domain_error);
}

TEST_CASE("parsing") {
    CHECK(Fraction::parse("7/5") == Fraction(7, 5));
    CHECK(Fraction::parse("-7/5") == Fraction(-7, 5));
    CHECK(Fraction::parse("3") == Fraction(3, 1));
    CHECK(Fraction::parse("inf").is_infinity());
    CHECK(Fraction::parse("4/6") == Fraction(2, 3));
    CHECK_THROWS_AS(Fraction::parse("x/y"), std::invalid_argument);
}

TEST_CASE("order puts infinity on top") {
    CHECK(Fraction(1, 2) < Fraction(2, 3));
    CHECK(Fraction(-5, 2) < Fraction(0, 1));
    CHECK(Fraction(100, 1) < Fraction::infinity());
    CHECK(!(Fraction::infinity() < Fraction::infinity()));
}

TEST_CASE("even continued fractions from the spec") {
    CHECK(continued_fraction_even(Fraction(7, 5)) ==
          std::vector<Int>{1, 2, 1, 1});
    CHECK(continued_fraction_even(Fraction(1, 2)) == std::vector<Int>{0, 2});
    CHECK(continued_fraction_even(Fraction(0, 1)) == std::vector<Int>{-1, 1});
    CHECK_THROWS_AS(continued_fraction_even(Fraction::infinity()), std::domain_error);
}

TEST_CASE("even expansion evaluates back and has a valid tail") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> dn(-40, 40), dd(1, 30);
    for (int i = 0; i < 500; ++i) {
        Fraction x(dn(rng), dd(rng));
        auto cf = continued_fraction_even(x);
        CHECK(cf.size() % 2 == 0);
        for (size_t k = 1; k < cf.size(); ++k) CHECK(cf[k] >= 1);
        CHECK(evaluate_continued_fraction(cf) == x);
        auto canon = continued_fraction_canonical(x);
        CHECK(evaluate_continued_fraction(canon) == x);
    }
}
