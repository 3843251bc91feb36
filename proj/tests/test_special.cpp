#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qmex/special.hpp"
#include "test_util.hpp"

#include <stdexcept>

using qmex::Monomial;
using qmex::TruncatedSeries;
using qmex::test::coeffs_of;
using qmex::test::series_of;

using VL = std::vector<long long>;

TEST_CASE("product generating functions") {
    CHECK(coeffs_of(qmex::overpartition_gf(10)) ==
          VL{1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232});
    CHECK(coeffs_of(qmex::odd_overpartition_gf(10)) ==
          VL{1, 2, 2, 4, 6, 8, 12, 16, 22, 30, 40});
}

TEST_CASE("R, first expansion") {
    CHECK(qmex::r_rep1(3) == series_of({1, 1, -1, 2}));
    CHECK(coeffs_of(qmex::r_rep1(10)) == VL{1, 1, -1, 2, -2, 1, 0, 1, -2, 0, 2});
}

TEST_CASE("the three representations of R agree") {
    const auto rep1 = qmex::r_rep1(120);
    CHECK(rep1 == qmex::r_rep2(120));
    CHECK(rep1 == qmex::r_rep3(120));
}

TEST_CASE("companion series and mock theta functions") {
    CHECK(coeffs_of(qmex::companion_f(12)) == VL{0, -1, -1, -1, 0, 0, 0, 1, 1, 0, 1, 1, 0});
    CHECK(coeffs_of(qmex::companion_f_neg(12)) ==
          VL{0, 1, -1, 1, 0, 0, 0, -1, 1, 0, 1, -1, 0});
    CHECK(coeffs_of(qmex::mock_theta_f0(10)) == VL{1, 1, -1, 1, 0, 0, -1, 1, 0, 1, -2});
    CHECK(coeffs_of(qmex::mock_theta_f1(10)) == VL{1, 1, 1, 1, 2, 2, 2, 3, 3, 3, 4});
}

TEST_CASE("sign-flipped builds match alternate_sign") {
    CHECK(qmex::companion_f(100).alternate_sign() == qmex::companion_f_neg(100));
    CHECK(qmex::mock_theta_f1(100).alternate_sign() == qmex::mock_theta_f1_neg(100));
}

TEST_CASE("tails and q-harmonic numbers") {
    CHECK(qmex::tail_series(0, 0).is_zero());
    CHECK(qmex::tail_series(5, 5).is_zero());
    CHECK(coeffs_of(qmex::tail_series(0, 6)) == VL{0, 1, 0, 2, -1, 2, 0});
    CHECK(qmex::q_harmonic(0, 8).is_zero());
    CHECK(coeffs_of(qmex::q_harmonic(2, 6)) == VL{0, 1, 2, 1, 2, 1, 2});
    for (std::size_t n : {1, 2, 3, 7, 12, 25}) {
        CHECK(qmex::q_harmonic(n, 80) == qmex::q_harmonic_binom_form(n, 80));
    }
}

TEST_CASE("divisor function series") {
    const auto lambert = qmex::divisor_lambert(100);
    CHECK(lambert == qmex::divisor_signed(100));
    for (int n = 1; n <= 100; ++n) {
        long long d = 0;
        for (int i = 1; i <= n; ++i) d += n % i == 0;
        CHECK(lambert.coefficient(static_cast<std::size_t>(n)) == d);
    }
}

TEST_CASE("counting-function closed forms, low coefficients") {
    CHECK(coeffs_of(qmex::omex_count_gf(10)) == VL{1, 1, 3, 4, 8, 13, 20, 31, 48, 72, 104});
    CHECK(coeffs_of(qmex::omoex_count_gf(10)) == VL{1, 1, 1, 3, 2, 4, 6, 7, 11, 12, 17});
    CHECK(coeffs_of(qmex::tilde_omex_count_gf(10)) ==
          VL{0, 1, 1, 3, 6, 10, 17, 29, 46, 73, 112});
    CHECK(coeffs_of(qmex::tilde_omoex_count_gf(10)) == VL{0, 1, 1, 1, 3, 4, 6, 8, 11, 15, 21});
}

TEST_CASE("raw product sums equal the closed forms") {
    CHECK(qmex::omex_count_direct(100) == qmex::omex_count_gf(100));
    CHECK(qmex::omoex_count_direct(100) == qmex::omoex_count_gf(100));
    CHECK(qmex::tilde_omex_count_direct(100) == qmex::tilde_omex_count_gf(100));
    CHECK(qmex::tilde_omoex_count_direct(100) == qmex::tilde_omoex_count_gf(100));
}

TEST_CASE("sigma closed forms, low coefficients") {
    CHECK(coeffs_of(qmex::sigma_omex_gf(10)) == VL{1, 2, 4, 7, 13, 22, 34, 55, 85, 130, 189});
    CHECK(coeffs_of(qmex::sigma_omoex_index_gf(10)) ==
          VL{1, 2, 2, 4, 5, 7, 11, 14, 20, 24, 33});
}

TEST_CASE("collapse identity equals 1 + z") {
    for (const char* z : {"q", "q^2", "q^3", "-q", "-q^2"}) {
        const Monomial m = Monomial::parse(z);
        TruncatedSeries expected = TruncatedSeries::one(100);
        expected.add_to_coefficient(m.exponent, m.sign);
        CHECK(qmex::gasrah_sum(m, 100) == expected);
    }
    CHECK(qmex::gasrah_sum(Monomial::zero(), 10) == TruncatedSeries::one(10));
}

TEST_CASE("paired partial-product sums") {
    const std::pair<Monomial, Monomial> instances[] = {
        {Monomial{-1, 0}, Monomial::q()},
        {Monomial::q(), Monomial::q()},
        {Monomial::neg_q(), Monomial::q(2)},
    };
    for (const auto& [c, t] : instances) {
        CHECK(qmex::gupta_lhs(c, t, 80) == qmex::gupta_rhs(c, t, 80));
    }
    CHECK_THROWS_AS(qmex::gupta_lhs(Monomial{1, 0}, Monomial::q(), 10), std::invalid_argument);
    CHECK_THROWS_AS(qmex::gupta_rhs(Monomial{1, 0}, Monomial::q(), 10), std::invalid_argument);
    CHECK_THROWS_AS(qmex::gupta_lhs(Monomial::q(), Monomial{1, 0}, 10), std::invalid_argument);
}

TEST_CASE("weighted endpoint identities") {
    CHECK(qmex::a_series(100) == qmex::r_rep1(100));
    CHECK(qmex::b_series(100) == qmex::b_series_tails(100));
    CHECK(qmex::c_series(100) == qmex::c_series_closed(100));
    CHECK(qmex::d_series(100) == qmex::d_series_closed(100));
}

TEST_CASE("build dispatches every id") {
    for (const std::string& id : qmex::builder_ids()) {
        const TruncatedSeries s = qmex::build(id, 10);
        CHECK(s.order() == 10);
    }
    CHECK(qmex::build("G.tail.3", 8) == qmex::tail_series(3, 8));
    CHECK(qmex::build("H.qharm.7", 30) == qmex::q_harmonic(7, 30));
    CHECK(qmex::build("H.qharm.AU.7", 30) == qmex::q_harmonic_binom_form(7, 30));
    CHECK(qmex::build("gasrah.lhs.z=-q^2", 20) == qmex::gasrah_sum(Monomial::neg_q(2), 20));
    CHECK(qmex::build("gupta.rhs.c=-q.t=q^2", 20) ==
          qmex::gupta_rhs(Monomial::neg_q(), Monomial::q(2), 20));

    CHECK_THROWS_AS(qmex::build("nosuch", 5), std::invalid_argument);
    CHECK_THROWS_AS(qmex::build("G.tail.x", 5), std::invalid_argument);
    CHECK_THROWS_AS(qmex::build("G.tail.-1", 5), std::invalid_argument);
    CHECK_THROWS_AS(qmex::build("gasrah.lhs.y=q", 5), std::invalid_argument);
}

TEST_CASE("builders are pure functions of the order") {
    CHECK(qmex::build("thm5.rhs", 40) == qmex::build("thm5.rhs", 40));
    CHECK(qmex::build("thm5.rhs", 60).truncated(40) == qmex::build("thm5.rhs", 40));
    CHECK(qmex::build("R.rep3", 90).truncated(55) == qmex::build("R.rep3", 55));
}
