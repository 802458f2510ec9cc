#include "symqt/macdonald.hpp"

#include <set>
#include <stdexcept>

namespace symqt {

CycloFactored b_factor_cf(const Partition& lam, int i, int j) {
    if (!lam.has_box(i, j)) throw std::invalid_argument("b_factor: box outside diagram");
    int a = lam.arm(i, j), l = lam.leg(i, j);
    return CycloFactored::factor(a, l + 1) * CycloFactored::factor(a + 1, l, -1);
}

ScalarQT b_factor(const Partition& lam, int i, int j) { return b_factor_cf(lam, i, j).expand(); }

namespace {

// b_lambda(s) with the convention b = 1 for boxes outside lambda.
CycloFactored b_or_one(const Partition& lam, int i, int j) {
    if (!lam.has_box(i, j)) return CycloFactored::one();
    return b_factor_cf(lam, i, j);
}

std::set<int> strip_columns(const Partition& mu, const Partition& nu) {
    std::set<int> cols;
    for (int i = 1; i <= mu.length(); ++i)
        for (int j = nu.part(i) + 1; j <= mu.part(i); ++j) cols.insert(j);
    return cols;
}

}  // namespace

CycloFactored psi_cf(const Partition& mu, const Partition& nu) {
    if (!is_horizontal_strip(mu, nu)) throw std::invalid_argument("psi: not a horizontal strip");
    auto cols = strip_columns(mu, nu);
    CycloFactored r;
    for (int i = 1; i <= mu.length(); ++i) {
        if (mu.part(i) == nu.part(i)) continue;  // row does not meet the strip
        for (int j = 1; j <= nu.part(i); ++j) {
            if (cols.count(j)) continue;
            r *= b_or_one(nu, i, j) / b_or_one(mu, i, j);
        }
    }
    return r;
}

CycloFactored phi_cf(const Partition& mu, const Partition& nu) {
    if (!is_horizontal_strip(mu, nu)) throw std::invalid_argument("phi: not a horizontal strip");
    auto cols = strip_columns(mu, nu);
    CycloFactored r;
    for (int j : cols) {
        for (int i = 1; i <= mu.length(); ++i) {
            if (!mu.has_box(i, j)) continue;
            r *= b_or_one(mu, i, j) / b_or_one(nu, i, j);
        }
    }
    return r;
}

CycloFactored psi_chain_cf(const StripChain& chain) {
    CycloFactored r;
    for (size_t k = 1; k < chain.size(); ++k) r *= psi_cf(chain[k - 1], chain[k]);
    return r;
}

CycloFactored b_norm_cf(const Partition& mu) {
    CycloFactored r;
    for (const auto& [i, j] : mu.boxes()) r *= b_factor_cf(mu, i, j);
    return r;
}

namespace {

template <class S, class Weight>
MultiPoly<S> tableau_sum(const Partition& mu, int N, Weight&& weight) {
    MultiPoly<S> r(N);
    for (const StripChain& chain : enumerate_rtab(mu, N)) {
        std::vector<int> e(N, 0);
        for (size_t k = 1; k < chain.size(); ++k)
            e[k - 1] = chain[k - 1].size() - chain[k].size();
        r.add_term(e, weight(chain));
    }
    return r;
}

}  // namespace

PolyQT macdonald_P(const Partition& mu, int N) {
    return tableau_sum<ScalarQT>(mu, N, [](const StripChain& c) { return psi_chain_cf(c).expand(); });
}

PolyQT macdonald_Q(const Partition& mu, int N) {
    return macdonald_P(mu, N).scaled(b_norm_cf(mu).expand());
}

PolyQT qwhittaker_P(const Partition& mu, int N) {
    return tableau_sum<ScalarQT>(mu, N, [](const StripChain& c) { return psi_chain_cf(c).expand_t0(); });
}

PolyQT hall_littlewood_P(const Partition& mu, int N) {
    return tableau_sum<ScalarQT>(mu, N, [](const StripChain& c) { return psi_chain_cf(c).expand_q0(); });
}

PolyKappa jack_P(const Partition& mu, int N) {
    return tableau_sum<ScalarKappa>(mu, N,
                                    [](const StripChain& c) { return psi_chain_cf(c).expand_jack(); });
}

}  // namespace symqt
