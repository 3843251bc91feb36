#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qmex/qproducts.hpp"
#include "test_util.hpp"

#include <stdexcept>

using qmex::Monomial;
using qmex::TruncatedSeries;
using qmex::pochhammer_finite;
using qmex::pochhammer_infinite;
using qmex::phi_1_0;
using qmex::phi_2_1;
using qmex::qbinomial;
using qmex::test::series_of;

TEST_CASE("monomial text round trip") {
    for (const char* text : {"0", "1", "-1", "q", "-q", "q^2", "-q^5"}) {
        CHECK(Monomial::parse(text).str() == text);
    }
    CHECK(Monomial::parse("q^1") == Monomial::q());
    CHECK(Monomial::q(2) * Monomial::neg_q(3) == Monomial::neg_q(5));
    CHECK((Monomial::q() * Monomial::zero()).is_zero());
    CHECK_THROWS_AS(Monomial::parse("2q"), std::invalid_argument);
    CHECK_THROWS_AS(Monomial::parse("q^"), std::invalid_argument);
    CHECK_THROWS_AS(Monomial::parse("-0"), std::invalid_argument);
}

TEST_CASE("finite pochhammer") {
    // (q;q)_3 = (1-q)(1-q^2)(1-q^3), expanded by hand
    CHECK(pochhammer_finite(Monomial::q(), 1, 3, 6) ==
          series_of({1, -1, -1, 0, 1, 1, -1}));
    // empty product
    CHECK(pochhammer_finite(Monomial::q(), 1, 0, 4) == TruncatedSeries::one(4));
    CHECK(pochhammer_finite(Monomial::zero(), 1, 10, 4) == TruncatedSeries::one(4));
    // (-q;q^2)_2 = (1+q)(1+q^3)
    CHECK(pochhammer_finite(Monomial::neg_q(), 2, 2, 4) == series_of({1, 1, 0, 1, 1}));
    // (1;q)_n vanishes for n >= 1
    CHECK(pochhammer_finite(Monomial{1, 0}, 1, 2, 4).is_zero());
    // (-1;q)_2 = 2(1+q)
    CHECK(pochhammer_finite(Monomial{-1, 0}, 1, 2, 4) == series_of({2, 2, 0, 0, 0}));
}

TEST_CASE("infinite pochhammer") {
    CHECK(pochhammer_infinite(Monomial::q(), 1, 5) == series_of({1, -1, -1, 0, 0, 1}));
    CHECK(pochhammer_infinite(Monomial::zero(), 1, 5) == TruncatedSeries::one(5));
    CHECK(pochhammer_infinite(Monomial::neg_q(), 2, 4) == series_of({1, 1, 0, 1, 1}));
    CHECK_THROWS_AS(pochhammer_infinite(Monomial{1, 0}, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(pochhammer_infinite(Monomial{-1, 0}, 1, 5), std::invalid_argument);
}

TEST_CASE("infinite pochhammer equals a long enough finite one") {
    for (const Monomial a : {Monomial::q(), Monomial::neg_q(), Monomial::q(3)}) {
        for (std::size_t base : {std::size_t{1}, std::size_t{2}}) {
            const std::size_t order = 40;
            const std::size_t enough = order / base + 1;
            CHECK(pochhammer_infinite(a, base, order) ==
                  pochhammer_finite(a, base, enough, order));
        }
    }
}

TEST_CASE("qbinomial values") {
    CHECK(qbinomial(4, 2, 4) == series_of({1, 1, 2, 1, 1}));
    CHECK(qbinomial(7, 0, 3) == TruncatedSeries::one(3));
    CHECK(qbinomial(2, 5, 8).is_zero());
    CHECK(qbinomial(-3, 2, 8).is_zero());
    CHECK(qbinomial(5, 5, 2) == TruncatedSeries::one(2));
    // order below the polynomial degree would silently truncate
    CHECK_THROWS_AS(qbinomial(4, 2, 3), std::invalid_argument);
}

TEST_CASE("qbinomial recurrence, symmetry and positivity") {
    for (long long m = 1; m <= 20; ++m) {
        for (long long n = 1; n < m; ++n) {
            const std::size_t order = static_cast<std::size_t>(m * m);
            const TruncatedSeries lhs = qbinomial(m, n, order);
            TruncatedSeries rhs = qbinomial(m - 1, n, order);
            rhs.add_shifted(qbinomial(m - 1, n - 1, order),
                            static_cast<std::size_t>(m - n));
            CHECK(lhs == rhs);

            // palindromic of degree n(m-n), nonnegative coefficients
            const std::size_t degree = static_cast<std::size_t>(n * (m - n));
            for (std::size_t k = 0; k <= degree; ++k) {
                CHECK(lhs.coefficient(k) >= 0);
                CHECK(lhs.coefficient(k) == lhs.coefficient(degree - k));
            }
            for (std::size_t k = degree + 1; k <= order; ++k)
                CHECK(lhs.coefficient(k).is_zero());
        }
    }
}

TEST_CASE("phi argument zero gives 1") {
    CHECK(phi_2_1(Monomial::q(), Monomial::neg_q(), Monomial::neg_q(2), Monomial::zero(), 1,
                  12) == TruncatedSeries::one(12));
    CHECK(phi_1_0(Monomial::neg_q(), Monomial::zero(), 1, 12) == TruncatedSeries::one(12));
}

TEST_CASE("phi rejects parameters outside the monomial-safe domain") {
    // c = 1 divides by zero, c = -1 leaves integer coefficients
    CHECK_THROWS_AS(phi_2_1(Monomial::q(), Monomial::q(2), Monomial{1, 0}, Monomial::q(), 1, 8),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        phi_2_1(Monomial::q(), Monomial::q(2), Monomial{-1, 0}, Monomial::q(), 1, 8),
        std::invalid_argument);
    // |z| = 1 does not truncate q-adically
    CHECK_THROWS_AS(
        phi_2_1(Monomial::q(), Monomial::q(2), Monomial::neg_q(), Monomial{1, 0}, 1, 8),
        std::invalid_argument);
}

TEST_CASE("phi_2_1 against direct termwise summation") {
    // a = 0, b = q^2, c = -q, z = q: sum_k (b)_k q^k / ((q)_k (-q)_k)
    const std::size_t order = 10;
    const Monomial b = Monomial::q(2);
    TruncatedSeries expected(order);
    for (std::size_t k = 0; k <= order; ++k) {
        TruncatedSeries term = pochhammer_finite(b, 1, k, order);
        term = term * pochhammer_finite(Monomial::q(), 1, k, order).inverse();
        term = term * pochhammer_finite(Monomial::neg_q(), 1, k, order).inverse();
        expected.add_shifted(term, k);
    }
    CHECK(phi_2_1(Monomial::zero(), b, Monomial::neg_q(), Monomial::q(), 1, order) == expected);
}

TEST_CASE("q-binomial theorem instances") {
    const std::size_t order = 100;
    const std::pair<Monomial, Monomial> instances[] = {
        {Monomial::zero(), Monomial::q()},  {Monomial::neg_q(), Monomial::q()},
        {Monomial::q(2), Monomial::q()},    {Monomial{-1, 0}, Monomial::q()},
        {Monomial::q(), Monomial::q(2)},    {Monomial::neg_q(2), Monomial::q(3)},
    };
    for (const auto& [a, z] : instances) {
        const TruncatedSeries lhs = phi_1_0(a, z, 1, order);
        const TruncatedSeries rhs = pochhammer_infinite(a * z, 1, order) *
                                    pochhammer_infinite(z, 1, order).inverse();
        CHECK(equal_up_to(lhs, rhs).agree());
    }
}

TEST_CASE("series transformation instance to order 50") {
    // lhs = phi(q, -q; -q^2; q, q); rhs via the standard transformation with
    // parameters (c/b, z; az) and argument b, both built independently here.
    const std::size_t order = 50;
    const TruncatedSeries lhs =
        phi_2_1(Monomial::q(), Monomial::neg_q(), Monomial::neg_q(2), Monomial::q(), 1, order);
    TruncatedSeries rhs = pochhammer_infinite(Monomial::neg_q(), 1, order) *
                          pochhammer_infinite(Monomial::q(2), 1, order);
    rhs = rhs * pochhammer_infinite(Monomial::neg_q(2), 1, order).inverse();
    rhs = rhs * pochhammer_infinite(Monomial::q(), 1, order).inverse();
    rhs = rhs * phi_2_1(Monomial::q(), Monomial::q(), Monomial::q(2), Monomial::neg_q(), 1,
                        order);
    CHECK(equal_up_to(lhs, rhs).agree());
}
