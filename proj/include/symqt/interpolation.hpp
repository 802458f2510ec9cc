#pragma once

#include "symqt/symfunc.hpp"

namespace symqt {

/// Interpolation node X_N(lam): i-th coordinate q^{-lam_i} t^{i-1}.
std::vector<ScalarQT> node(const Partition& lam, int N);

/// Interpolation Macdonald polynomial, tableau sum:
///   I_{mu|N} = sum over reverse tableaux of psi_T * prod over boxes (i,j) of
///   (x_{T(i,j)} - q^{1-j} t^{T(i,j)+i-2}).
/// Zero when l(mu) > N; top homogeneous component is P_{mu|N}.
PolyQT interp_I(const Partition& mu, int N);

/// Same polynomial from the branching rule
///   I_{mu|N}(x_1..x_N) = sum over strips nu < mu of
///     psi_{mu/nu} t^{|nu|} prod_{(i,j) in mu/nu} (x_1 - q^{1-j} t^{i-1})
///     * I_{nu|N-1}(x_2/t, ..., x_N/t).
/// Used as an independent cross-check of interp_I.
PolyQT interp_I_branching(const Partition& mu, int N);

/// t = 0 degeneration (q-Whittaker case): only the first-row boxes holding
/// value 1 keep their shift q^{1-j}.
PolyQT whittaker_A(const Partition& mu, int N);

/// q = 0 degeneration (Hall-Littlewood case):
///   sum of psi_T(0,t) prod (x_{T(i,j)} - t^{2-T(i,j)-i} [j=1]).
PolyQT hl_A(const Partition& mu, int N);

/// Jack degeneration over Q(kappa):
///   sum of psi_T(kappa) prod (x_{T(i,j)} - (j-1) + (T(i,j)+i-2) kappa).
PolyKappa jack_interp_I(const Partition& mu, int N);

/// phi_N(p_n) = x_1^n + ... + x_N^n + t^{Nn}/(1-t^n), extended as an algebra
/// morphism to symmetric functions given in the power-sum basis.
PolyQT phi_N(const SymFunc& f, int N);

/// The symmetric function with phi_N image I_{mu|N} for every N >= l(mu),
/// in the power-sum basis (recovered by degree peeling from one large-N
/// image).
SymFunc interp_I_sym(const Partition& mu);

/// P_{mu|N}(1, t, ..., t^{N-1}) (evaluation at the node of the empty
/// partition).
ScalarQT principal_specialization(const PolyQT& p, int N);

/// Binomial expansion of Macdonald polynomials over interpolation
/// polynomials:
///   P_{mu|N}/P_{mu|N}(1,t,..) =
///   sum_{nu in mu} [I_{nu|N}(X_N(mu))/I_{nu|N}(X_N(nu))] *
///                  I_{nu|N}/P_{nu|N}(1,t,..)
/// checked as an exact polynomial identity.
bool verify_binomial_identity(const Partition& mu, int N);

}  // namespace symqt
