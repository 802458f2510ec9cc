#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symqt/dual.hpp"

using namespace symqt;

namespace {
const ScalarQT one = ScalarQT::one();

// H_{nu|K} as a y-series from the combinatorial rational form: expand in
// u^{-1} and divide by prod_j (y_j; q)_inf.
SeriesQT dual_H_to_series(const Partition& mu, int K, int order) {
    SeriesQT s = dual_H(mu, K, DualFamily::QT).expand_u_series(0, 0, order);
    auto inv = pochhammer_inv_coeffs(order);
    for (int j = 0; j < K; ++j) {
        SeriesQT::Expo step(K, 0);
        step[j] = 1;
        s *= expand_along<ScalarQT>(0, K, 0, order, step, one, inv);
    }
    return s;
}

}  // namespace

TEST_CASE("strip weight examples") {
    // mu = nu = (1): (u - t/q) / (u - 1/q)
    auto w = strip_weight(Partition({1}), Partition({1}), DualFamily::QT);
    CHECK(w.scalar == one);
    REQUIRE(w.num_roots.size() == 1);
    CHECK(w.num_roots[0] == qt_q(-1) * qt_t());
    REQUIRE(w.den_roots.size() == 1);
    CHECK(w.den_roots[0] == qt_q(-1));

    // mu = (1), nu = empty: ((1-t)/(1-q)) / (u - 1/q)
    auto w2 = strip_weight(Partition({1}), Partition::empty(), DualFamily::QT);
    CHECK(w2.scalar == (one - qt_t()) / (one - qt_q()));
    CHECK(w2.num_roots.empty());
    REQUIRE(w2.den_roots.size() == 1);

    // hall-littlewood mu=(1), nu=empty: (1-t) * u^0 / (u - t)
    auto w3 = strip_weight(Partition({1}), Partition::empty(), DualFamily::HallLittlewood);
    CHECK(w3.scalar == one - qt_t());
    CHECK(w3.u_shift == 0);
    CHECK(w3.num_roots.empty());
    REQUIRE(w3.den_roots.size() == 1);
    CHECK(w3.den_roots[0] == qt_t());

    CHECK_THROWS(strip_weight(Partition({1}), Partition({2}), DualFamily::QT));
}

TEST_CASE("dual_H base cases") {
    CHECK(dual_H(Partition::empty(), 2, DualFamily::QT) ==
          RatFnQT(PolyQT::constant(2, one)));
    CHECK(dual_H(Partition({1, 1, 1}), 2, DualFamily::QT).is_zero_fn());

    // K=1, mu=(m): ((t;q)_m/(q;q)_m) / ((u-1/q)...(u-q^{-m}))
    for (int m = 1; m <= 3; ++m) {
        RatFnQT h = dual_H(Partition({m}), 1, DualFamily::QT);
        ScalarQT expect = one;
        for (int k = 1; k <= m; ++k)
            expect *= (one - qt_mono(k - 1, 1)) / (one - qt_q(k));
        CHECK(h.num() == PolyQT::constant(1, expect));
        int total = 0;
        for (const auto& [f, mm] : h.den()) total += mm;
        CHECK(total == m);
    }

    // K=2, mu=(1): ((1-t)/(1-q)) (u1+u2-1/q-t/q) / ((u1-1/q)(u2-1/q))
    RatFnQT h = dual_H(Partition({1}), 2, DualFamily::QT);
    ScalarQT c = (one - qt_t()) / (one - qt_q());
    PolyQT num = (PolyQT::variable(2, 0) + PolyQT::variable(2, 1)).scaled(c);
    num.add_term({0, 0}, -c * (qt_q(-1) + qt_q(-1) * qt_t()));
    CHECK(h.num() == num);
}

TEST_CASE("dual_H is symmetric") {
    for (int n = 0; n <= 4; ++n)
        for (const Partition& mu : partitions_of(n, 2)) {
            CHECK(dual_H(mu, 2, DualFamily::QT).is_symmetric());
            CHECK(dual_H(mu, 2, DualFamily::Whittaker).is_symmetric());
            CHECK(dual_H(mu, 2, DualFamily::HallLittlewood).is_symmetric());
        }
}

TEST_CASE("lowest u-order term of the y-expansion is Q_mu") {
    for (int n = 0; n <= 4; ++n)
        for (const Partition& mu : partitions_of(n, 2)) {
            SeriesQT s = dual_H_to_series(mu, 2, 4);
            PolyQT qmu = macdonald_Q(mu, 2);
            for (const auto& [e, c] : qmu.terms()) {
                CHECK(s.coeff(e) == c);
            }
            for (const auto& [e, c] : s.terms()) {
                int d = e[0] + e[1];
                CHECK(d >= n);  // no terms below |mu|
                if (d == n) CHECK(c == qmu.coeff(e));
            }
        }
}

TEST_CASE("skew dual series") {
    // non-strip vanishes
    CHECK(skew_dual_series(Partition({1}), Partition({3}), 4).is_zero_series());

    // mu=(1), nu=empty, leading term ((1-t)/(1-q)) y
    SeriesQT s = skew_dual_series(Partition({1}), Partition::empty(), 1);
    CHECK(s.coeff({0}).is_zero());
    CHECK(s.coeff({1}) == (one - qt_t()) / (one - qt_q()));

    // (y;q)_inf * series equals the strip weight expanded in u^{-1}, order 5
    for (int n = 0; n <= 4; ++n)
        for (const Partition& mu : partitions_of(n, 3))
            for (const Partition& nu : sub_strips(mu)) {
                const int D = 5;
                SeriesQT lhs = skew_dual_series(mu, nu, D);
                lhs *= expand_along<ScalarQT>(0, 1, 0, D, {1}, one, pochhammer_coeffs(D));
                auto w = strip_weight(mu, nu, DualFamily::QT);
                // w as a rational function of a single u
                PolyQT num = PolyQT::constant(1, w.scalar);
                RatFnQT::FactorMap den;
                for (const auto& r : w.num_roots) {
                    PolyQT lin = PolyQT::variable(1, 0);
                    lin.add_term({0}, -r);
                    num *= lin;
                }
                for (const auto& r : w.den_roots) den[{0, -1, r}] += 1;
                SeriesQT rhs = RatFnQT(num, den).expand_u_series(0, 0, D);
                CAPTURE(mu.str());
                CAPTURE(nu.str());
                CHECK(lhs.first_difference(rhs) == std::nullopt);
            }
}

TEST_CASE("duality oracle agrees with the combinatorial dual") {
    for (int n = 0; n <= 3; ++n)
        for (const Partition& nu : partitions_of(n, 3))
            for (int K = 1; K <= 2; ++K) {
                const int order = 3;
                SeriesQT oracle = dual_by_duality_oracle(nu, K, order);
                SeriesQT comb = dual_H_to_series(nu, K, order);
                CAPTURE(nu.str());
                CAPTURE(K);
                CHECK(oracle.first_difference(comb) == std::nullopt);
            }
}

TEST_CASE("multiparameter schur") {
    std::vector<ScalarQT> zeros(8, ScalarQT::zero());
    // c = 0 gives ordinary Schur: s_(1)|2 = x1 + x2
    CHECK(multiparam_schur(Partition({1}), 2, zeros) ==
          PolyQT::variable(2, 0) + PolyQT::variable(2, 1));
    // s_(1,1)|2 = x1 x2
    CHECK(multiparam_schur(Partition({1, 1}), 2, zeros) ==
          PolyQT::variable(2, 0) * PolyQT::variable(2, 1));

    // t=q interpolation polynomials: c_n = q^{N-1-n}
    for (int N = 1; N <= 3; ++N) {
        std::vector<ScalarQT> c;
        for (int n = 0; n < 8; ++n) c.push_back(qt_q(N - 1 - n));
        for (int d = 0; d <= 3; ++d)
            for (const Partition& mu : partitions_of(d, N)) {
                PolyQT lhs = interp_I(mu, N).map_coeffs(
                    [](const ScalarQT& s) { return s.subs_var1_to_var0(); });
                CAPTURE(mu.str());
                CAPTURE(N);
                CHECK(lhs == multiparam_schur(mu, N, c));
            }
    }
}

TEST_CASE("dual sigma and the t=q dual functions") {
    for (int N = 1; N <= 2; ++N) {
        std::vector<ScalarQT> c;  // c[i] = c_{i+1} = q^{N-2-i}
        for (int n = 1; n < 8; ++n) c.push_back(qt_q(N - 1 - n));
        for (int d = 0; d <= 3; ++d)
            for (const Partition& mu : partitions_of(d, N)) {
                RatFnQT sig = dual_sigma(mu, N, c);
                RatFnQT h = dual_H(mu, N, DualFamily::QT)
                                .map_coeffs([](const ScalarQT& s) { return s.subs_var1_to_var0(); });
                CAPTURE(mu.str());
                CAPTURE(N);
                CHECK(sig == h);
            }
    }
}

TEST_CASE("sigma stability at u_N = infinity") {
    std::vector<ScalarQT> c;
    for (int n = 1; n < 9; ++n) c.push_back(ScalarQT(Int(n)));  // c_n = n
    std::vector<ScalarQT> shifted(c.begin() + 1, c.end());
    for (int N = 2; N <= 3; ++N)
        for (int d = 0; d <= 3; ++d)
            for (const Partition& mu : partitions_of(d, N)) {
                RatFnQT lim = dual_sigma(mu, N, c).limit_var_to_infinity(N - 1);
                CAPTURE(mu.str());
                CAPTURE(N);
                if (mu.part(N) > 0) {
                    CHECK(lim.is_zero_fn());
                } else {
                    RatFnQT expect = dual_sigma(mu, N - 1, shifted);
                    // lift to N variables (last variable unused)
                    RatFnQT::FactorMap den;
                    for (const auto& [f, m] : expect.den()) den[{f.var, f.other, f.c}] += m;
                    RatFnQT lifted(expect.num().extended(1), std::move(den));
                    CHECK(lim == lifted);
                }
            }
}

TEST_CASE("one-variable multiparameter expansion") {
    // sum_m (x|c_0,c_1,..)^m / (u|c_1,c_2,..)^m = (u-c_0)/(u-x), order 6
    std::vector<ScalarQT> c;
    for (int n = 0; n < 10; ++n) c.push_back(ScalarQT(Int(2 * n + 1)));
    const int D = 6;
    SeriesQT lhs(1, 1, D, D);
    for (int m = 0; m <= D; ++m) {
        // numerator (x|c_0..)^m as polynomial in x
        PolyQT numx = PolyQT::constant(1, ScalarQT::one());
        for (int n = 0; n < m; ++n) {
            PolyQT lin = PolyQT::variable(1, 0);
            lin.add_term({0}, -c[n]);
            numx *= lin;
        }
        // denominator (u|c_1..)^m expanded in u^{-1}
        RatFnQT::FactorMap den;
        for (int n = 1; n <= m; ++n) den[{0, -1, c[n]}] += 1;
        SeriesQT dser = RatFnQT(PolyQT::constant(1, ScalarQT::one()), den)
                            .expand_u_series(1, D, D);
        lhs += SeriesQT::from_poly_x(numx, 1, D, D) * dser;
    }
    // rhs = (u - c_0)/(u - x) = (1 - c_0 u^{-1}) * 1/(1 - x u^{-1})
    SeriesQT rhs = geometric_series<ScalarQT>(1, 1, D, D, {1, 1}, ScalarQT::one());
    SeriesQT pref = SeriesQT::one(1, 1, D, D);
    pref.add_term({0, 1}, -c[0]);
    rhs *= pref;
    CHECK(lhs.first_difference(rhs) == std::nullopt);
}

TEST_CASE("whittaker duals are the t=0 specialization of the qt duals") {
    for (int n = 0; n <= 4; ++n)
        for (const Partition& mu : partitions_of(n, 2))
            for (int K = mu.length(); K <= 2; ++K) {
                RatFnQT w = dual_H(mu, K, DualFamily::Whittaker);
                RatFnQT spec = dual_H(mu, K, DualFamily::QT).map_coeffs(
                    [](const ScalarQT& s) { return s.subs_var1_zero(); });
                CAPTURE(mu.str());
                CAPTURE(K);
                CHECK(w == spec);
            }
}

namespace {

// The q=0 dual family from its definition: invert both parameters in the
// exact dual, rescale every variable u -> u q / t, then set q = 0.
RatFnQT hl_dual_from_definition(const Partition& mu, int K) {
    RatFnQT h = dual_H(mu, K, DualFamily::QT);
    PolyQT num = h.num().map_coeffs([](const ScalarQT& s) { return s.subs_inverted(); });
    std::vector<int> all(K);
    for (int v = 0; v < K; ++v) all[v] = v;
    num = num.vars_scaled(all, qt_mono(1, -1));
    RatFnQT::FactorMap den;
    for (const auto& [f, m] : h.den()) {
        ScalarQT c = f.c.subs_inverted() * qt_mono(-1, 1);
        den[{f.var, f.other, c}] += m;
        num = num.scaled(qt_mono(-1, 1).pow(m));
    }
    num = num.map_coeffs([](const ScalarQT& s) { return s.subs_var0_zero(); });
    RatFnQT::FactorMap den0;
    for (const auto& [f, m] : den) den0[{f.var, f.other, f.c.subs_var0_zero()}] += m;
    return RatFnQT(std::move(num), std::move(den0));
}

}  // namespace

TEST_CASE("hall-littlewood duals match their defining substitution") {
    for (int n = 0; n <= 4; ++n)
        for (const Partition& mu : partitions_of(n, 2))
            for (int K = std::max(mu.length(), 1); K <= 2; ++K) {
                CAPTURE(mu.str());
                CAPTURE(K);
                CHECK(dual_H(mu, K, DualFamily::HallLittlewood) == hl_dual_from_definition(mu, K));
            }
}

TEST_CASE("hall-littlewood duals are stable at u_K = infinity") {
    for (int n = 0; n <= 4; ++n)
        for (const Partition& mu : partitions_of(n, 1)) {
            RatFnQT lim = dual_H(mu, 2, DualFamily::HallLittlewood).limit_var_to_infinity(1);
            RatFnQT expect = dual_H(mu, 1, DualFamily::HallLittlewood);
            RatFnQT::FactorMap den;
            for (const auto& [f, m] : expect.den()) den[{f.var, f.other, f.c}] += m;
            CAPTURE(mu.str());
            CHECK(lim == RatFnQT(expect.num().extended(1), std::move(den)));
        }
}
