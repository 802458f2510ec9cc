#pragma once

#include <map>

#include "symqt/macdonald.hpp"
#include "symqt/multipoly.hpp"
#include "symqt/partition.hpp"

namespace symqt {

enum class SymBasis { Monomial, PowerSum, MacdonaldP, MacdonaldQ };

/// Symmetric function over Q(q,t) up to a degree bound, stored as a sparse
/// map partition -> coefficient in one of the supported bases.
struct SymFunc {
    SymBasis basis = SymBasis::Monomial;
    int degree_bound = 0;
    std::map<Partition, ScalarQT> coef;

    static SymFunc zero(SymBasis b, int bound) { return SymFunc{b, bound, {}}; }
    static SymFunc unit(SymBasis b, const Partition& mu, int bound);

    void add(const Partition& mu, const ScalarQT& c);
    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator-(const SymFunc& o) const;
    SymFunc scaled(const ScalarQT& c) const;
    bool is_zero_func() const { return coef.empty(); }
};

Int z_lambda(const Partition& lam);
/// <p_lam, p_lam> = z_lam * prod_i (1-q^{lam_i})/(1-t^{lam_i}).
ScalarQT power_sum_norm(const Partition& lam);

/// Expansion into N variables.  N must be at least the degree bound for the
/// result to determine the function.
PolyQT sym_to_poly(const SymFunc& f, int N);

/// Read a symmetric polynomial (in at least degree-many variables) back into
/// the monomial basis.
SymFunc poly_to_monomial_sym(const PolyQT& p, int degree_bound);

SymFunc to_monomial(const SymFunc& f);
SymFunc to_power_sum(const SymFunc& f);
/// Expansion in the Macdonald P basis (unitriangular peel against the
/// monomial basis in lex order).
SymFunc to_macdonald_P(const SymFunc& f);

ScalarQT scalar_product(const SymFunc& f, const SymFunc& g);

/// Macdonald P_mu in the monomial basis computed by Gram-Schmidt
/// orthogonalization of the monomial basis for the (q,t) scalar product,
/// independent of any tableau formula.  Results are cached.
const SymFunc& gram_schmidt_P(const Partition& mu);

/// <P_mu, P_mu>.
ScalarQT macdonald_P_norm(const Partition& mu);

}  // namespace symqt
