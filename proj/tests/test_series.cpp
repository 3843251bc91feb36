#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qmex/series.hpp"
#include "test_util.hpp"

#include <random>
#include <stdexcept>

using qmex::Coefficient;
using qmex::TruncatedSeries;
using qmex::test::random_series;
using qmex::test::random_unit_series;
using qmex::test::series_of;

TEST_CASE("monomial construction") {
    CHECK(TruncatedSeries::monomial(1, 0, 5) == series_of({1, 0, 0, 0, 0, 0}));
    CHECK(TruncatedSeries::monomial(-1, 2, 5) == series_of({0, 0, -1, 0, 0, 0}));
    // exponent beyond the order: every stored coefficient is zero
    CHECK(TruncatedSeries::monomial(3, 7, 5).is_zero());
    CHECK(TruncatedSeries::one(3) == series_of({1, 0, 0, 0}));
}

TEST_CASE("add and sub") {
    CHECK(series_of({1, 1}) + series_of({1, -1}) == series_of({2, 0}));
    const TruncatedSeries s = series_of({3, -2, 5, 7});
    CHECK(s + TruncatedSeries::zero(3) == s);
    CHECK(s - s == TruncatedSeries::zero(3));
    CHECK(-s == series_of({-3, 2, -5, -7}));

    // mixed orders truncate to the smaller one
    const TruncatedSeries a = series_of({0, 1, 1});           // q + q^2 at order 2
    const TruncatedSeries b = series_of({0, 0, 0, 1});        // q^3 at order 3
    CHECK(a + b == series_of({0, 1, 1}));
    CHECK((a + b).order() == 2);
}

TEST_CASE("mul") {
    CHECK(series_of({1, -1, 0, 0}) * series_of({1, 1, 1, 1}) == series_of({1, 0, 0, 0}));
    const TruncatedSeries s = series_of({2, 0, -3, 1});
    CHECK(s * TruncatedSeries::one(3) == s);
    CHECK(series_of({1, 1, 0}) * series_of({1, 1, 0}) == series_of({1, 2, 1}));
}

TEST_CASE("invert") {
    CHECK(series_of({1, -1, 0, 0}).inverse() == series_of({1, 1, 1, 1}));
    CHECK(TruncatedSeries::one(4).inverse() == TruncatedSeries::one(4));

    const TruncatedSeries a = series_of({1, 1, 0, 0});
    const TruncatedSeries b = a.inverse();
    CHECK(b == series_of({1, -1, 1, -1}));
    CHECK(a * b == TruncatedSeries::one(3));

    CHECK_THROWS_WITH_AS(series_of({2, 1}).inverse(), "not invertible at this truncation",
                         std::domain_error);
    CHECK_THROWS_AS(series_of({0, 1}).inverse(), std::domain_error);
}

TEST_CASE("substitute_q_power") {
    CHECK(series_of({1, 1}).substitute_q_power(2) == series_of({1, 0}));
    CHECK(series_of({1, 1, 0}).substitute_q_power(2) == series_of({1, 0, 1}));
    const TruncatedSeries s = series_of({4, -1, 2, 0, 3});
    CHECK(s.substitute_q_power(1) == s);

    TruncatedSeries t(9);
    t.set_coefficient(1, 1);
    t.set_coefficient(3, 1);
    TruncatedSeries expected(9);
    expected.set_coefficient(3, 1);
    expected.set_coefficient(9, 1);
    CHECK(t.substitute_q_power(3) == expected);

    CHECK_THROWS_AS(s.substitute_q_power(0), std::invalid_argument);
}

TEST_CASE("alternate_sign") {
    CHECK(series_of({1, 1, 1}).alternate_sign() == series_of({1, -1, 1}));
    std::mt19937 rng(7);
    for (int i = 0; i < 20; ++i) {
        const TruncatedSeries s = random_series(rng, 16);
        CHECK(s.alternate_sign().alternate_sign() == s);
    }
}

TEST_CASE("shift, scale and accessors") {
    const TruncatedSeries s = series_of({1, 2, 3});
    CHECK(s.shifted(1) == series_of({0, 1, 2}));
    CHECK(s.scaled(-2) == series_of({-2, -4, -6}));
    CHECK(s.coefficient(1) == 2);
    CHECK_THROWS_AS(s.coefficient(3), std::out_of_range);
    CHECK(s.truncated(1) == series_of({1, 2}));
    CHECK_THROWS_AS(s.truncated(4), std::invalid_argument);
}

TEST_CASE("in-place factor helpers match explicit multiplication") {
    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        const std::size_t order = 1 + rng() % 24;
        const TruncatedSeries s = random_series(rng, order);
        const int sign = rng() % 2 ? 1 : -1;
        const std::size_t k = 1 + rng() % order;
        TruncatedSeries factor = TruncatedSeries::one(order);
        factor.add_to_coefficient(k, sign);

        TruncatedSeries mul = s;
        mul.mul_factor(sign, k);
        CHECK(mul == s * factor);

        TruncatedSeries div = s * factor;
        div.div_factor(sign, k);
        CHECK(div == s);
    }
}

TEST_CASE("equal_up_to reports the first mismatch") {
    const TruncatedSeries a = series_of({1, 2, 3, 4});
    TruncatedSeries b = series_of({1, 2, 3, 4, 9});
    auto cmp = equal_up_to(a, b);
    CHECK(cmp.compared_order == 3);
    CHECK(cmp.agree());

    b.add_to_coefficient(2, 1);
    cmp = equal_up_to(a, b);
    CHECK_FALSE(cmp.agree());
    CHECK(cmp.first_mismatch == 2);
}

TEST_CASE("ring axioms on random series") {
    std::mt19937 rng(12345);
    for (int i = 0; i < 300; ++i) {
        const std::size_t order = rng() % 33;
        const TruncatedSeries a = random_series(rng, order);
        const TruncatedSeries b = random_series(rng, order);
        const TruncatedSeries c = random_series(rng, order);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + TruncatedSeries::zero(order) == a);
        CHECK(a * TruncatedSeries::one(order) == a);
    }
}

TEST_CASE("inverse contract on random unit series") {
    std::mt19937 rng(54321);
    for (int i = 0; i < 200; ++i) {
        const std::size_t order = rng() % 33;
        const TruncatedSeries a = random_unit_series(rng, order);
        CHECK(a * a.inverse() == TruncatedSeries::one(order));
    }
}

TEST_CASE("substitute_q_power is a ring homomorphism") {
    std::mt19937 rng(999);
    for (int i = 0; i < 100; ++i) {
        const std::size_t order = rng() % 25;
        const std::size_t m = 1 + rng() % 4;
        const TruncatedSeries a = random_series(rng, order);
        const TruncatedSeries b = random_series(rng, order);
        CHECK((a + b).substitute_q_power(m) ==
              a.substitute_q_power(m) + b.substitute_q_power(m));
        CHECK((a * b).substitute_q_power(m) ==
              a.substitute_q_power(m) * b.substitute_q_power(m));
    }
}

TEST_CASE("alternate_sign distributes over products") {
    std::mt19937 rng(424242);
    for (int i = 0; i < 100; ++i) {
        const std::size_t order = rng() % 25;
        const TruncatedSeries a = random_series(rng, order);
        const TruncatedSeries b = random_series(rng, order);
        CHECK((a * b).alternate_sign() == a.alternate_sign() * b.alternate_sign());
    }
}

TEST_CASE("coefficients stay exact at large magnitudes") {
    // (1+q)^256 at order 8: binomials of 256 overflow 64 bits from C(256,8) on...
    TruncatedSeries s = TruncatedSeries::one(8);
    for (int i = 0; i < 256; ++i) s.mul_factor(1, 1);
    Coefficient expected = 1;
    for (int k = 0; k < 8; ++k) expected = expected * (256 - k) / (k + 1);  // C(256,8)
    CHECK(s.coefficient(8) == expected);
    CHECK(s.coefficient(8).str() == "409663695276000");

    // and far past 64 bits
    TruncatedSeries t = series_of({1, 1}).scaled(Coefficient("123456789123456789123456789"));
    CHECK((t * t).coefficient(1).str() ==
          "30483157561347357092211556562109441031245241500381042");
}

TEST_CASE("to_string pretty printer") {
    CHECK(qmex::to_string(series_of({1, 2, 0, -1})) == "1 + 2q - q^3");
    CHECK(qmex::to_string(TruncatedSeries::zero(4)) == "0");
    CHECK(qmex::to_string(series_of({0, -3})) == "-3q");
}
