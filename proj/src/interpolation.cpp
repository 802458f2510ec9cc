#include "symqt/interpolation.hpp"

#include <stdexcept>

namespace symqt {

std::vector<ScalarQT> node(const Partition& lam, int N) {
    if (lam.length() > N) throw std::invalid_argument("node: partition longer than N");
    std::vector<ScalarQT> x;
    x.reserve(N);
    for (int i = 1; i <= N; ++i) x.push_back(qt_mono(-lam.part(i), i - 1));
    return x;
}

namespace {

// Product over the boxes of a chain of (x_{value} - shift(box, value)).
template <class S, class Shift>
MultiPoly<S> chain_product(const StripChain& chain, int N, const S& weight, Shift&& shift) {
    MultiPoly<S> r = MultiPoly<S>::constant(N, weight);
    for (size_t k = 1; k < chain.size(); ++k) {
        const Partition& big = chain[k - 1];
        const Partition& small = chain[k];
        for (int i = 1; i <= big.length(); ++i) {
            for (int j = small.part(i) + 1; j <= big.part(i); ++j) {
                MultiPoly<S> lin = MultiPoly<S>::variable(N, static_cast<int>(k) - 1);
                lin.add_term(std::vector<int>(N, 0), -shift(i, j, static_cast<int>(k)));
                r *= lin;
            }
        }
    }
    return r;
}

}  // namespace

PolyQT interp_I(const Partition& mu, int N) {
    PolyQT r(N);
    for (const StripChain& chain : enumerate_rtab(mu, N)) {
        r += chain_product<ScalarQT>(chain, N, psi_chain_cf(chain).expand(),
                                     [](int i, int j, int k) { return qt_mono(1 - j, k + i - 2); });
    }
    return r;
}

PolyQT interp_I_branching(const Partition& mu, int N) {
    if (mu.length() > N) return PolyQT(N);
    if (N == 0) return PolyQT::constant(0, ScalarQT::one());
    PolyQT r(N);
    for (const Partition& nu : sub_strips(mu)) {
        PolyQT inner = interp_I_branching(nu, N - 1);
        // x_i -> x_i / t on all inner variables, then shift slots by one.
        std::vector<int> all(N - 1);
        for (int v = 0; v < N - 1; ++v) all[v] = v;
        inner = inner.vars_scaled(all, qt_t(-1));
        PolyQT lifted(N);
        for (const auto& [e, c] : inner.terms()) {
            std::vector<int> ne(N, 0);
            for (int v = 0; v < N - 1; ++v) ne[v + 1] = e[v];
            lifted.add_term(ne, c);
        }
        PolyQT head = PolyQT::constant(N, psi_cf(mu, nu).expand() * qt_t(nu.size()));
        for (int i = 1; i <= mu.length(); ++i) {
            for (int j = nu.part(i) + 1; j <= mu.part(i); ++j) {
                PolyQT lin = PolyQT::variable(N, 0);
                lin.add_term(std::vector<int>(N, 0), -qt_mono(1 - j, i - 1));
                head *= lin;
            }
        }
        r += head * lifted;
    }
    return r;
}

PolyQT whittaker_A(const Partition& mu, int N) {
    PolyQT r(N);
    for (const StripChain& chain : enumerate_rtab(mu, N)) {
        r += chain_product<ScalarQT>(chain, N, psi_chain_cf(chain).expand_t0(),
                                     [](int i, int j, int k) {
                                         return (i == 1 && k == 1) ? qt_q(1 - j) : ScalarQT::zero();
                                     });
    }
    return r;
}

PolyQT hl_A(const Partition& mu, int N) {
    PolyQT r(N);
    for (const StripChain& chain : enumerate_rtab(mu, N)) {
        r += chain_product<ScalarQT>(chain, N, psi_chain_cf(chain).expand_q0(),
                                     [](int i, int j, int k) {
                                         return j == 1 ? qt_t(2 - k - i) : ScalarQT::zero();
                                     });
    }
    return r;
}

PolyKappa jack_interp_I(const Partition& mu, int N) {
    PolyKappa r(N);
    for (const StripChain& chain : enumerate_rtab(mu, N)) {
        r += chain_product<ScalarKappa>(chain, N, psi_chain_cf(chain).expand_jack(),
                                        [](int i, int j, int k) {
                                            return ScalarKappa(Int(j - 1)) -
                                                   kappa().pow(1) * ScalarKappa(Int(k + i - 2));
                                        });
    }
    return r;
}

PolyQT phi_N(const SymFunc& f, int N) {
    const SymFunc fp = to_power_sum(f);
    PolyQT r(N);
    for (const auto& [lam, c] : fp.coef) {
        PolyQT term = PolyQT::constant(N, c);
        for (int i = 1; i <= lam.length(); ++i) {
            int n = lam.part(i);
            PolyQT pn(N);
            for (int v = 0; v < N; ++v) {
                std::vector<int> e(N, 0);
                e[v] = n;
                pn.add_term(e, ScalarQT::one());
            }
            pn.add_term(std::vector<int>(N, 0), qt_t(N * n) / (ScalarQT::one() - qt_t(n)));
            term *= pn;
        }
        r += term;
    }
    return r;
}

SymFunc interp_I_sym(const Partition& mu) {
    const int d = mu.size();
    const int M = std::max(d, 1);
    PolyQT g = interp_I(mu, M);
    SymFunc f = SymFunc::zero(SymBasis::PowerSum, d);
    for (int k = d; k >= 0; --k) {
        PolyQT top = g.homogeneous_component(k);
        if (top.is_zero_poly()) continue;
        SymFunc fk = to_power_sum(poly_to_monomial_sym(top, k));
        f = f + fk;
        f.degree_bound = d;
        g -= phi_N(fk, M);
        if (!g.is_zero_poly() && g.total_degree() >= k)
            throw std::logic_error("interp_I_sym: degree peeling failed");
    }
    if (!g.is_zero_poly()) throw std::logic_error("interp_I_sym: nonzero remainder");
    return f;
}

ScalarQT principal_specialization(const PolyQT& p, int N) { return p.eval(node(Partition::empty(), N)); }

bool verify_binomial_identity(const Partition& mu, int N) {
    if (mu.length() > N) throw std::invalid_argument("verify_binomial: l(mu) > N");
    const auto xmu = node(mu, N);
    PolyQT lhs = macdonald_P(mu, N);
    ScalarQT pn = principal_specialization(lhs, N);
    if (pn.is_zero()) return false;
    lhs = lhs.scaled(pn.inverse());

    PolyQT rhs(N);
    for (const Partition& nu : partitions_up_to(mu.size(), N)) {
        if (!mu.contains(nu)) continue;
        PolyQT inu = interp_I(nu, N);
        ScalarQT at_mu = inu.eval(xmu);
        if (at_mu.is_zero()) continue;
        ScalarQT at_nu = inu.eval(node(nu, N));
        ScalarQT pden = principal_specialization(macdonald_P(nu, N), N);
        if (at_nu.is_zero() || pden.is_zero()) return false;
        rhs += inu.scaled(at_mu / (at_nu * pden));
    }
    return lhs == rhs;
}

}  // namespace symqt
