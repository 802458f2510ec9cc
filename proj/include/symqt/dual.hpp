#pragma once

#include "symqt/interpolation.hpp"
#include "symqt/ratfn.hpp"

namespace symqt {

enum class DualFamily { QT, Jack, Whittaker, HallLittlewood };

/// Univariate strip weight attached to a horizontal strip mu/nu:
///   scalar * u^{u_shift} * prod (u - num_roots) / prod (u - den_roots).
template <class S>
struct StripWeight {
    S scalar;
    int u_shift = 0;
    std::vector<S> num_roots;
    std::vector<S> den_roots;
};

/// Weight for the (q,t) family:
///   phi_{mu/nu} * prod_{i<=l(mu)} prod_{j<=nu_i-mu_{i+1}} (u - q^{j-1-nu_i} t^i)
///     / ((u - 1/q) ... (u - q^{-mu_1})),
/// and its Whittaker (t=0) and Hall-Littlewood degenerations.
StripWeight<ScalarQT> strip_weight(const Partition& mu, const Partition& nu, DualFamily family);
/// Jack weight over Q(kappa):
///   phi_{mu/nu}(kappa) * prod prod (u - (nu_i+j-1) + i kappa) / ((u-1)...(u-mu_1)).
StripWeight<ScalarKappa> strip_weight_jack(const Partition& mu, const Partition& nu);

/// Dual function in K variables as a sum over chains of strip-weight
/// products; zero when l(mu) > K.  Symmetric in u_1..u_K.
RatFnQT dual_H(const Partition& mu, int K, DualFamily family);
RatFnKappa dual_H_jack(const Partition& mu, int K);

/// Univariate skew dual function as a power series in y to the given order;
/// zero unless mu/nu is a horizontal strip.  Satisfies
///   (y;q)_inf * series(y) = strip weight at u = 1/y.
SeriesQT skew_dual_series(const Partition& mu, const Partition& nu, int order);

/// Dual functions computed with no reference to the combinatorial formula:
/// solve the biorthogonality conditions <I_mu, H_nu> = delta degree by degree
/// in the Macdonald-Q expansion, then restrict to K variables.  Returns the
/// series in y_1..y_K up to total degree `order`.
SeriesQT dual_by_duality_oracle(const Partition& nu, int K, int order);

/// Multiparameter Schur polynomial det[(x_j | c)^{mu_i+N-i}] / V(x); zero when
/// l(mu) > N.  Needs c_0..c_{mu_1+N-2}.
PolyQT multiparam_schur(const Partition& mu, int N, const std::vector<ScalarQT>& c);

/// Dual Schur function sigma_{mu|N}(u | c_1, c_2, ...), computed from the
/// ratio-of-determinants definition and cross-checked against the Vandermonde
/// form; the two routes must agree.  Needs c_1..c_{mu_1+N-1}.
RatFnQT dual_sigma(const Partition& mu, int N, const std::vector<ScalarQT>& c);

}  // namespace symqt
