#include "symqt/qseries.hpp"

#include <stdexcept>

namespace symqt {

namespace {

// exp of a univariate series with zero constant term, coefficients a[1..D].
std::vector<ScalarQT> series_exp(const std::vector<ScalarQT>& a) {
    const int D = static_cast<int>(a.size()) - 1;
    std::vector<ScalarQT> r(D + 1, ScalarQT::zero());
    std::vector<ScalarQT> pw(D + 1, ScalarQT::zero());
    r[0] = ScalarQT::one();
    pw[0] = ScalarQT::one();
    Int fact = 1;
    for (int k = 1; k <= D; ++k) {
        // pw := pw * a, truncated
        std::vector<ScalarQT> np(D + 1, ScalarQT::zero());
        for (int i = 0; i <= D; ++i) {
            if (pw[i].is_zero()) continue;
            for (int j = 1; i + j <= D; ++j) np[i + j] += pw[i] * a[j];
        }
        pw = std::move(np);
        fact *= k;
        ScalarQT invfact{Rat(Int(1), fact)};
        bool all_zero = true;
        for (int i = 0; i <= D; ++i) {
            if (pw[i].is_zero()) continue;
            r[i] += pw[i] * invfact;
            all_zero = false;
        }
        if (all_zero) break;
    }
    return r;
}

std::vector<ScalarQT> series_inv(const std::vector<ScalarQT>& a) {
    const int D = static_cast<int>(a.size()) - 1;
    if (a[0].is_zero()) throw std::domain_error("series_inv: zero constant term");
    std::vector<ScalarQT> r(D + 1, ScalarQT::zero());
    ScalarQT c0inv = a[0].inverse();
    r[0] = c0inv;
    for (int n = 1; n <= D; ++n) {
        ScalarQT s = ScalarQT::zero();
        for (int k = 1; k <= n; ++k) s += a[k] * r[n - k];
        r[n] = -(c0inv * s);
    }
    return r;
}

std::vector<ScalarQT> pochhammer_from_qpow(int D, bool invert_q) {
    // -sum_{m>=1} z^m / (m (1 - q^{+-m}))
    std::vector<ScalarQT> logser(D + 1, ScalarQT::zero());
    for (int m = 1; m <= D; ++m) {
        ScalarQT qm = invert_q ? qt_q(-m) : qt_q(m);
        logser[m] = -(ScalarQT(Rat(Int(1), Int(m))) / (ScalarQT::one() - qm));
    }
    return series_exp(logser);
}

}  // namespace

std::vector<ScalarQT> pochhammer_coeffs(int D) { return pochhammer_from_qpow(D, false); }

std::vector<ScalarQT> pochhammer_coeffs_qinv(int D) { return pochhammer_from_qpow(D, true); }

std::vector<ScalarQT> pochhammer_inv_coeffs(int D) { return series_inv(pochhammer_coeffs(D)); }

std::vector<ScalarQT> qbinomial_pair_coeffs(int D) {
    // (t;q)_k / (q;q)_k
    std::vector<ScalarQT> r(D + 1);
    r[0] = ScalarQT::one();
    ScalarQT acc = ScalarQT::one();
    for (int k = 1; k <= D; ++k) {
        acc *= (ScalarQT::one() - qt_mono(k - 1, 1)) / (ScalarQT::one() - qt_q(k));
        r[k] = acc;
    }
    return r;
}

SeriesQT series_from_product(int nx, int nu, int cutx, int cutu, const std::vector<PochFactor>& fs) {
    SeriesQT r = SeriesQT::one(nx, nu, cutx, cutu);
    const int Dmax = cutx + cutu;
    std::vector<ScalarQT> plus = pochhammer_coeffs(Dmax);
    std::vector<ScalarQT> minus = series_inv(plus);
    for (const auto& f : fs) {
        SeriesQT::Expo step(nx + nu, 0);
        if (f.x_var >= 0) step[f.x_var] = 1;
        if (f.u_var >= 0) step[nx + f.u_var] = 1;
        if (f.x_var < 0 && f.u_var < 0)
            throw std::invalid_argument("series_from_product: factor without variables");
        const auto& coeffs = f.sign >= 0 ? plus : minus;
        r *= expand_along<ScalarQT>(nx, nu, cutx, cutu, step, f.c, coeffs);
    }
    return r;
}

SeriesQT pochhammer_series(int nu, int var_index, int D) {
    SeriesQT::Expo step(nu, 0);
    step.at(var_index) = 1;
    return expand_along<ScalarQT>(0, nu, 0, D, step, ScalarQT::one(), pochhammer_coeffs(D));
}

}  // namespace symqt
