#pragma once

#include "symqt/cyclo.hpp"
#include "symqt/multipoly.hpp"
#include "symqt/partition.hpp"

namespace symqt {

/// b_lambda(s) = (1 - q^arm t^(leg+1)) / (1 - q^(arm+1) t^leg) for a box
/// s = (i,j) of lambda (1-based coordinates).
CycloFactored b_factor_cf(const Partition& lam, int i, int j);
ScalarQT b_factor(const Partition& lam, int i, int j);

/// Branching coefficients for a horizontal strip mu/nu:
///   psi  = prod over boxes in rows meeting the strip but columns not:
///          b_nu(s) / b_mu(s)
///   phi  = prod over boxes in columns meeting the strip: b_mu(s) / b_nu(s)
/// with b taken as 1 outside the respective diagram.  Both throw when mu/nu
/// is not a horizontal strip.
CycloFactored psi_cf(const Partition& mu, const Partition& nu);
CycloFactored phi_cf(const Partition& mu, const Partition& nu);

/// Tableau weight: product of psi over the steps of a chain.
CycloFactored psi_chain_cf(const StripChain& chain);

/// b_mu = prod over boxes of mu of b_mu(s); Q_mu = b_mu * P_mu.
CycloFactored b_norm_cf(const Partition& mu);

/// Macdonald polynomial P_{mu|N} from the tableau sum; zero when l(mu) > N.
/// Monic on the monomial m_mu.
PolyQT macdonald_P(const Partition& mu, int N);
PolyQT macdonald_Q(const Partition& mu, int N);

/// Specializations of the same tableau sum.
PolyQT qwhittaker_P(const Partition& mu, int N);      // t = 0
PolyQT hall_littlewood_P(const Partition& mu, int N); // q = 0
PolyKappa jack_P(const Partition& mu, int N);

}  // namespace symqt
