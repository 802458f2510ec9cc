#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symqt/qseries.hpp"

using namespace symqt;

TEST_CASE("pochhammer series endpoints") {
    auto c0 = pochhammer_coeffs(0);
    REQUIRE(c0.size() == 1);
    CHECK(c0[0] == ScalarQT::one());

    auto c1 = pochhammer_coeffs(1);
    CHECK(c1[1] == -(ScalarQT::one() / (ScalarQT::one() - qt_q())));
}

TEST_CASE("pochhammer euler form") {
    // (z;q)_inf = sum_k (-1)^k q^{k(k-1)/2} / (q;q)_k z^k
    auto c = pochhammer_coeffs(6);
    ScalarQT qq = ScalarQT::one();
    for (int k = 1; k <= 6; ++k) {
        qq *= ScalarQT::one() - qt_q(k);
        ScalarQT expect = qt_q(k * (k - 1) / 2) / qq;
        if (k % 2 == 1) expect = -expect;
        CHECK(c[k] == expect);
    }
}

TEST_CASE("inversion identity (z;1/q) * (zq;q) = 1") {
    for (int D : {3, 5, 8}) {
        auto inv = pochhammer_coeffs_qinv(D);
        auto reg = pochhammer_coeffs(D);
        // (zq;q)_inf has coefficients reg[k] * q^k
        std::vector<ScalarQT> shifted(D + 1);
        for (int k = 0; k <= D; ++k) shifted[k] = reg[k] * qt_q(k);
        for (int n = 0; n <= D; ++n) {
            ScalarQT s = ScalarQT::zero();
            for (int k = 0; k <= n; ++k) s += inv[k] * shifted[n - k];
            CHECK(s == (n == 0 ? ScalarQT::one() : ScalarQT::zero()));
        }
    }
}

TEST_CASE("series_from_product basics") {
    // empty product
    SeriesQT one = series_from_product(1, 1, 2, 2, {});
    CHECK(one.coeff({0, 0}) == ScalarQT::one());
    CHECK(one.terms().size() == 1);

    // single factor (x u^{-1}; q)^{-1}: coefficient of x u^{-1} is 1/(1-q)
    SeriesQT f = series_from_product(1, 1, 2, 2, {{ScalarQT::one(), 0, 0, -1}});
    CHECK(f.coeff({1, 1}) == ScalarQT::one() / (ScalarQT::one() - qt_q()));

    // (x u^{-1} t; q) * (x u^{-1}; q)^{-1} at order 1: 1 + (1-t)/(1-q) x u^{-1}
    SeriesQT g = series_from_product(1, 1, 1, 1,
                                     {{qt_t(), 0, 0, +1}, {ScalarQT::one(), 0, 0, -1}});
    CHECK(g.coeff({0, 0}) == ScalarQT::one());
    CHECK(g.coeff({1, 1}) == (ScalarQT::one() - qt_t()) / (ScalarQT::one() - qt_q()));
}

TEST_CASE("qbinomial pair coefficients match the two-factor product") {
    int D = 5;
    auto direct = qbinomial_pair_coeffs(D);
    SeriesQT prod = series_from_product(0, 1, 0, D,
                                        {{qt_t(), -1, 0, +1}, {ScalarQT::one(), -1, 0, -1}});
    for (int k = 0; k <= D; ++k) {
        std::vector<int> e{k};
        CHECK(prod.coeff(e) == direct[k]);
    }
}

TEST_CASE("series multiplication commutes and respects truncation") {
    SeriesQT a = series_from_product(1, 1, 3, 3, {{qt_t(), 0, 0, +1}});
    SeriesQT b = series_from_product(1, 1, 3, 3, {{ScalarQT::one(), 0, 0, -1}});
    CHECK((a * b).first_difference(b * a) == std::nullopt);

    // truncate-then-multiply equals multiply-then-truncate
    SeriesQT ab = (a * b).truncated(2, 2);
    SeriesQT ab2 = a.truncated(2, 2) * b.truncated(2, 2);
    CHECK(ab.first_difference(ab2) == std::nullopt);
}

TEST_CASE("series inverse") {
    SeriesQT a = series_from_product(1, 1, 3, 3, {{qt_t(), 0, 0, +1}});
    SeriesQT prod = a * a.inverse();
    SeriesQT one = SeriesQT::one(1, 1, 3, 3);
    CHECK(prod.first_difference(one) == std::nullopt);
}

TEST_CASE("geometric helpers") {
    // 1/(u - c) = sum_k c^k u^{-k-1}
    auto s = inv_linear_u<ScalarQT>(0, 1, 0, 3, 0, qt_q(-1));
    CHECK(s.coeff({1}) == ScalarQT::one());
    CHECK(s.coeff({2}) == qt_q(-1));
    CHECK(s.coeff({3}) == qt_q(-2));
}

TEST_CASE("multipoly ring axioms on random triples") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> e(0, 2), c(-3, 3), pick(0, 2);
    auto rnd = [&]() {
        PolyQT p(3);
        for (int k = 0; k < 4; ++k) {
            std::vector<int> ex{e(rng), e(rng), e(rng)};
            p.add_term(ex, qt_q(pick(rng)) * qt_t(pick(rng)) * ScalarQT(Int(c(rng))));
        }
        return p;
    };
    for (int it = 0; it < 15; ++it) {
        PolyQT a = rnd(), b = rnd(), cc = rnd();
        CHECK((a + b) + cc == a + (b + cc));
        CHECK((a * b) * cc == a * (b * cc));
        CHECK(a * (b + cc) == a * b + a * cc);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("inverse pochhammer coefficients are 1/(q;q)_k") {
    SeriesQT f = series_from_product(1, 1, 2, 2, {{ScalarQT::one(), 0, 0, -1}});
    ScalarQT qq1 = ScalarQT::one() - qt_q();
    ScalarQT qq2 = qq1 * (ScalarQT::one() - qt_q(2));
    CHECK(f.coeff({1, 1}) == qq1.inverse());
    CHECK(f.coeff({2, 2}) == qq2.inverse());
}
