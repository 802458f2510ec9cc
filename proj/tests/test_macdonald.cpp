#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symqt/interpolation.hpp"
#include "symqt/macdonald.hpp"
#include "symqt/symfunc.hpp"

using namespace symqt;

namespace {
const ScalarQT one = ScalarQT::one();
}

TEST_CASE("b factors") {
    CHECK(b_factor(Partition({1}), 1, 1) == (one - qt_t()) / (one - qt_q()));
    CHECK(b_factor(Partition({2}), 1, 1) == (one - qt_q() * qt_t()) / (one - qt_q(2)));
    CHECK(b_factor(Partition({1, 1}), 1, 1) == (one - qt_t(2)) / (one - qt_q() * qt_t()));
    CHECK_THROWS(b_factor(Partition({1}), 2, 1));
}

TEST_CASE("psi and phi branching factors") {
    CHECK(phi_cf(Partition({2, 1}), Partition({2, 1})).expand() == one);
    CHECK(phi_cf(Partition({1}), Partition::empty()).expand() == (one - qt_t()) / (one - qt_q()));
    ScalarQT psi21 = psi_cf(Partition({2}), Partition({1})).expand();
    CHECK(psi21 == (one - qt_t()) * (one - qt_q(2)) / ((one - qt_q()) * (one - qt_q() * qt_t())));
    CHECK_THROWS(psi_cf(Partition({2, 2}), Partition({1})));
}

TEST_CASE("psi chain weight is invariant under (q,t) -> (1/q,1/t)") {
    for (int n = 1; n <= 5; ++n) {
        for (const Partition& mu : partitions_of(n, 3)) {
            for (const auto& chain : enumerate_rtab(mu, 3)) {
                ScalarQT w = psi_chain_cf(chain).expand();
                CHECK(w.subs_inverted() == w);
            }
        }
    }
}

TEST_CASE("macdonald P examples") {
    PolyQT p1 = macdonald_P(Partition({1}), 3);
    PolyQT expect(3);
    for (int v = 0; v < 3; ++v) expect += PolyQT::variable(3, v);
    CHECK(p1 == expect);

    CHECK(macdonald_P(Partition({1, 1}), 2) == PolyQT::variable(2, 0) * PolyQT::variable(2, 1));

    PolyQT p2 = macdonald_P(Partition({2}), 2);
    CHECK(p2.coeff({2, 0}) == one);
    CHECK(p2.coeff({0, 2}) == one);
    CHECK(p2.coeff({1, 1}) ==
          (one - qt_t()) * (one + qt_q()) / (one - qt_q() * qt_t()));

    CHECK(macdonald_P(Partition({1, 1, 1}), 2).is_zero_poly());
}

TEST_CASE("gram-schmidt oracle small cases") {
    CHECK(gram_schmidt_P(Partition({1})).coef.size() == 1);
    CHECK(gram_schmidt_P(Partition({1, 1})).coef.size() == 1);
    const SymFunc& p2 = gram_schmidt_P(Partition({2}));
    CHECK(p2.coef.at(Partition({2})) == one);
    CHECK(p2.coef.at(Partition({1, 1})) == (one - qt_t()) * (one + qt_q()) / (one - qt_q() * qt_t()));
}

TEST_CASE("oracle equivalence for all |mu| <= 4, N <= 3") {
    for (int n = 0; n <= 4; ++n) {
        for (const Partition& mu : partitions_of(n, n)) {
            const SymFunc& p = gram_schmidt_P(mu);
            for (int N = 1; N <= 3; ++N) {
                CAPTURE(mu.str()); CAPTURE(N);
                CHECK(macdonald_P(mu, N) == sym_to_poly(p, N));
            }
        }
    }
}

TEST_CASE("gram-schmidt output is dominance triangular") {
    for (int n = 2; n <= 5; ++n) {
        for (const Partition& mu : partitions_of(n, n)) {
            for (const auto& [lam, c] : gram_schmidt_P(mu).coef) {
                CHECK(dominates(mu, lam));
            }
        }
    }
}

TEST_CASE("scalar product") {
    SymFunc p1 = SymFunc::unit(SymBasis::PowerSum, Partition({1}), 1);
    CHECK(scalar_product(p1, p1) == (one - qt_q()) / (one - qt_t()));
    SymFunc u = SymFunc::unit(SymBasis::PowerSum, Partition::empty(), 0);
    CHECK(scalar_product(u, u) == one);

    SymFunc f = SymFunc::unit(SymBasis::MacdonaldP, Partition({2}), 2);
    SymFunc g = SymFunc::unit(SymBasis::MacdonaldQ, Partition({1, 1}), 2);
    CHECK(scalar_product(f, g).is_zero());
}

TEST_CASE("P/Q duality normalization up to degree 4") {
    for (int n = 0; n <= 4; ++n) {
        for (const Partition& mu : partitions_of(n, n)) {
            for (const Partition& nu : partitions_of(n, n)) {
                SymFunc f = SymFunc::unit(SymBasis::MacdonaldP, mu, n);
                SymFunc g = SymFunc::unit(SymBasis::MacdonaldQ, nu, n);
                ScalarQT v = scalar_product(f, g);
                CHECK(v == (mu == nu ? one : ScalarQT::zero()));
            }
        }
    }
}

TEST_CASE("basis conversions round trip") {
    for (int n = 1; n <= 4; ++n) {
        for (const Partition& mu : partitions_of(n, n)) {
            SymFunc m = SymFunc::unit(SymBasis::Monomial, mu, n);
            CHECK((to_monomial(to_power_sum(m)) - m).is_zero_func());
            SymFunc back = to_monomial(to_macdonald_P(m));
            CHECK((back - m).is_zero_func());
        }
    }
}

TEST_CASE("macdonald P output symmetric and homogeneous") {
    for (int n = 1; n <= 4; ++n) {
        for (const Partition& mu : partitions_of(n, 3)) {
            PolyQT p = macdonald_P(mu, 3);
            CHECK(p.is_symmetric());
            CHECK(p.homogeneous_component(n) == p);
        }
    }
}
