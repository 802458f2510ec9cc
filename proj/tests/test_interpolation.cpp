#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symqt/interpolation.hpp"

using namespace symqt;

namespace {
const ScalarQT one = ScalarQT::one();
}

TEST_CASE("nodes") {
    auto x = node(Partition::empty(), 3);
    CHECK(x[0] == one);
    CHECK(x[1] == qt_t());
    CHECK(x[2] == qt_t(2));

    auto y = node(Partition({2, 1}), 2);
    CHECK(y[0] == qt_q(-2));
    CHECK(y[1] == qt_q(-1) * qt_t());

    CHECK_THROWS(node(Partition({1, 1, 1}), 2));
}

TEST_CASE("one-variable and one-row I") {
    // I_{(m)|1} = (x-1)(x-1/q)...(x-q^{1-m})
    for (int m = 1; m <= 4; ++m) {
        PolyQT expect = PolyQT::constant(1, one);
        for (int j = 1; j <= m; ++j) {
            PolyQT lin = PolyQT::variable(1, 0);
            lin.add_term({0}, -qt_q(1 - j));
            expect *= lin;
        }
        CHECK(interp_I(Partition({m}), 1) == expect);
    }

    // I_{(1)|N} = sum x_i - (1 + t + ... + t^{N-1})
    for (int N = 1; N <= 3; ++N) {
        PolyQT expect(N);
        ScalarQT c = ScalarQT::zero();
        for (int v = 0; v < N; ++v) {
            expect += PolyQT::variable(N, v);
            c += qt_t(v);
        }
        expect.add_term(std::vector<int>(N, 0), -c);
        CHECK(interp_I(Partition({1}), N) == expect);
    }

    CHECK(interp_I(Partition::empty(), 2) == PolyQT::constant(2, one));
}

TEST_CASE("evaluation and vanishing at nodes") {
    PolyQT i1 = interp_I(Partition({1}), 2);
    CHECK(i1.eval(node(Partition::empty(), 2)).is_zero());
    PolyQT i11 = interp_I(Partition({1}), 1);
    CHECK(i11.eval(node(Partition({1}), 1)) == qt_q(-1) - one);
}

TEST_CASE("tableau and branching builders agree") {
    for (int n = 0; n <= 4; ++n) {
        for (const Partition& mu : partitions_of(n, 3)) {
            for (int N = 1; N <= 3; ++N) {
                CAPTURE(mu.str()); CAPTURE(N);
                CHECK(interp_I(mu, N) == interp_I_branching(mu, N));
            }
        }
    }
}

TEST_CASE("top component of I is macdonald P") {
    for (int n = 0; n <= 5; ++n) {
        for (const Partition& mu : partitions_of(n, 3)) {
            for (int N = 1; N <= 3; ++N) {
                CHECK(interp_I(mu, N).homogeneous_component(n) == macdonald_P(mu, N));
            }
        }
    }
}

TEST_CASE("quasi-stability") {
    for (int n = 0; n <= 4; ++n) {
        for (const Partition& mu : partitions_of(n, 3)) {
            for (int N = 2; N <= 3; ++N) {
                PolyQT restricted = interp_I(mu, N).subs_var(N - 1, qt_t(N - 1)).drop_var(N - 1);
                if (mu.length() <= N - 1) {
                    CHECK(restricted == interp_I(mu, N - 1));
                } else {
                    CHECK(restricted.is_zero_poly());
                }
            }
        }
    }
}

TEST_CASE("phi_N morphism") {
    // phi_1(p_1) = x + t/(1-t)
    SymFunc p1 = SymFunc::unit(SymBasis::PowerSum, Partition({1}), 1);
    PolyQT im = phi_N(p1, 1);
    PolyQT expect = PolyQT::variable(1, 0);
    expect.add_term({0}, qt_t() / (one - qt_t()));
    CHECK(im == expect);

    // phi_2(p_1 - 1/(1-t)) = x1 + x2 - (1+t) = I_{(1)|2}
    SymFunc f = p1;
    f.add(Partition::empty(), -(one / (one - qt_t())));
    CHECK(phi_N(f, 2) == interp_I(Partition({1}), 2));

    SymFunc c = SymFunc::unit(SymBasis::PowerSum, Partition::empty(), 0).scaled(qt_q(2));
    CHECK(phi_N(c, 2) == PolyQT::constant(2, qt_q(2)));
}

TEST_CASE("interp_I_sym inverts phi_N") {
    for (int n = 0; n <= 4; ++n) {
        for (const Partition& mu : partitions_of(n, n)) {
            SymFunc f = interp_I_sym(mu);
            for (int N = std::max(1, mu.length()); N <= 3; ++N) {
                CAPTURE(mu.str()); CAPTURE(N);
                CHECK(phi_N(f, N) == interp_I(mu, N));
            }
        }
    }
}

TEST_CASE("binomial expansion identity") {
    CHECK(verify_binomial_identity(Partition::empty(), 1));
    CHECK(verify_binomial_identity(Partition({1}), 2));
    CHECK(verify_binomial_identity(Partition({2, 1}), 2));
}

TEST_CASE("whittaker A") {
    // A^W_{(1)|2} = x1 + x2 - 1
    PolyQT a = whittaker_A(Partition({1}), 2);
    PolyQT expect = PolyQT::variable(2, 0) + PolyQT::variable(2, 1);
    expect.add_term({0, 0}, -one);
    CHECK(a == expect);
    // t = 0 of the full interpolation polynomial, coefficient-wise
    for (int n = 0; n <= 3; ++n)
        for (const Partition& mu : partitions_of(n, 2)) {
            PolyQT direct = whittaker_A(mu, 2);
            PolyQT sub = interp_I(mu, 2).map_coeffs([](const ScalarQT& c) { return c.subs_var1_zero(); });
            CHECK(direct == sub);
        }
}

TEST_CASE("hall-littlewood A") {
    // A^HL_{(1)|2} = x1 + x2 - (1 + 1/t)
    PolyQT a = hl_A(Partition({1}), 2);
    PolyQT expect = PolyQT::variable(2, 0) + PolyQT::variable(2, 1);
    expect.add_term({0, 0}, -(one + qt_t(-1)));
    CHECK(a == expect);
    CHECK(hl_A(Partition::empty(), 2) == PolyQT::constant(2, one));

    // top component is the Hall-Littlewood polynomial
    for (int n = 0; n <= 4; ++n)
        for (const Partition& mu : partitions_of(n, 2)) {
            CHECK(hl_A(mu, 2).homogeneous_component(n) == hall_littlewood_P(mu, 2));
        }
}

TEST_CASE("hall-littlewood A quasi-stability") {
    for (int n = 0; n <= 4; ++n) {
        for (const Partition& mu : partitions_of(n, 3)) {
            for (int N = 2; N <= 3; ++N) {
                if (mu.length() > N - 1) continue;
                PolyQT restricted = hl_A(mu, N).subs_var(N - 1, qt_t(1 - N)).drop_var(N - 1);
                CAPTURE(mu.str()); CAPTURE(N);
                CHECK(restricted == hl_A(mu, N - 1));
            }
        }
    }
}

TEST_CASE("jack interpolation polynomials") {
    CHECK(jack_interp_I(Partition({1}), 1) == PolyKappa::variable(1, 0));
    CHECK(jack_interp_I(Partition::empty(), 2) == PolyKappa::constant(2, ScalarKappa(1)));
    // I_{(2)|1} = x(x-1)
    PolyKappa x = PolyKappa::variable(1, 0);
    PolyKappa expect = x * x - x;
    CHECK(jack_interp_I(Partition({2}), 1) == expect);
}

TEST_CASE("extra vanishing") {
    for (int n = 0; n <= 3; ++n) {
        for (const Partition& mu : partitions_of(n, 2)) {
            PolyQT imu = interp_I(mu, 2);
            for (const Partition& lam : partitions_up_to(n + 3, 2)) {
                if (mu.contains(lam) && lam != mu) continue;  // small lambda handled below
                if (!lam.contains(mu)) {
                    CHECK(imu.eval(node(lam, 2)).is_zero());
                }
            }
            CHECK_FALSE(imu.eval(node(mu, 2)).is_zero());
        }
    }
}

TEST_CASE("whittaker A is stable in the last variable") {
    for (int n = 0; n <= 4; ++n)
        for (const Partition& mu : partitions_of(n, 2))
            for (int N = std::max<int>(mu.length() + 1, 2); N <= 3; ++N) {
                PolyQT restricted = whittaker_A(mu, N).subs_var(N - 1, ScalarQT::zero()).drop_var(N - 1);
                CAPTURE(mu.str());
                CAPTURE(N);
                CHECK(restricted == whittaker_A(mu, N - 1));
            }
}

TEST_CASE("hall-littlewood A matches its defining substitution") {
    // A^HL is the q = 0 value of the interpolation polynomial with both
    // parameters inverted.
    for (int n = 0; n <= 4; ++n)
        for (const Partition& mu : partitions_of(n, 2)) {
            PolyQT direct = hl_A(mu, 2);
            PolyQT sub = interp_I(mu, 2).map_coeffs(
                [](const ScalarQT& s) { return s.subs_inverted().subs_var0_zero(); });
            CAPTURE(mu.str());
            CHECK(direct == sub);
        }
}
