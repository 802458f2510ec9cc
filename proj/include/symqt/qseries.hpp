#pragma once

#include <vector>

#include "symqt/series.hpp"

namespace symqt {

/// Coefficients a_0..a_D of (z;q)_inf = exp(-sum_{m>=1} z^m / (m(1-q^m)))
/// as a power series in z over Q(q).
std::vector<ScalarQT> pochhammer_coeffs(int D);

/// Same with q replaced by 1/q, i.e. the coefficients of (z;1/q)_inf.
std::vector<ScalarQT> pochhammer_coeffs_qinv(int D);

/// Coefficients of 1/(z;q)_inf.
std::vector<ScalarQT> pochhammer_inv_coeffs(int D);

/// Coefficients of (t z;q)_inf / (z;q)_inf = sum_k ((t;q)_k/(q;q)_k) z^k.
std::vector<ScalarQT> qbinomial_pair_coeffs(int D);

/// One Pochhammer-type factor of a product: (c * x_{xv} * u_{uv}^{-1}; q)_inf
/// raised to sign (+1 or -1).  xv or uv may be -1 when the factor does not
/// involve that block.
struct PochFactor {
    ScalarQT c = ScalarQT::one();
    int x_var = -1;
    int u_var = -1;
    int sign = +1;
};

/// Truncated expansion of a product of Pochhammer factors in a series frame
/// with nx direct and nu inverse variables.
SeriesQT series_from_product(int nx, int nu, int cutx, int cutu, const std::vector<PochFactor>& fs);

/// Single-variable (z;q)_inf in an inverse-block frame of nu variables:
/// z = u_{var_index}^{-1}.
SeriesQT pochhammer_series(int nu, int var_index, int D);

/// Expansion of a univariate coefficient list along a monomial direction:
/// sum_k a_k (c * step)^k inside the given frame.
template <class S>
TruncSeries<S> expand_along(int nx, int nu, int cutx, int cutu,
                            const typename TruncSeries<S>::Expo& step, const S& c,
                            const std::vector<S>& coeffs) {
    TruncSeries<S> r(nx, nu, cutx, cutu);
    typename TruncSeries<S>::Expo e(nx + nu, 0);
    S ck(1);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (k > 0) {
            for (int i = 0; i < nx + nu; ++i) e[i] += step[i];
            ck = ck * c;
        }
        if (r.deg_x(e) > cutx || r.deg_u(e) > cutu) break;
        r.add_term(e, coeffs[k] * ck);
    }
    return r;
}

/// 1/(1 - c*step) expanded as a geometric series.
template <class S>
TruncSeries<S> geometric_series(int nx, int nu, int cutx, int cutu,
                                const typename TruncSeries<S>::Expo& step, const S& c) {
    std::vector<S> ones(static_cast<size_t>(cutx + cutu) + 1, S(1));
    return expand_along<S>(nx, nu, cutx, cutu, step, c, ones);
}

/// Expansion of 1/(u_j - c) as a series in u_j^{-1}: u^{-1} sum_k (c u^{-1})^k.
template <class S>
TruncSeries<S> inv_linear_u(int nx, int nu, int cutx, int cutu, int j, const S& c) {
    typename TruncSeries<S>::Expo step(nx + nu, 0);
    step[nx + j] = 1;
    TruncSeries<S> g = geometric_series<S>(nx, nu, cutx, cutu, step, c);
    return g.times_monomial(step, S(1));
}

}  // namespace symqt
