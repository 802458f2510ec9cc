#include "symqt/dual.hpp"

#include <mutex>
#include <stdexcept>

namespace symqt {

namespace {

template <class S>
std::vector<S> qt_den_roots(int mu1, bool jack) {
    std::vector<S> r;
    for (int k = 1; k <= mu1; ++k) {
        if constexpr (std::is_same_v<S, ScalarKappa>)
            r.push_back(ScalarKappa(Int(k)));
        else
            r.push_back(qt_q(-k));
    }
    (void)jack;
    return r;
}

}  // namespace

StripWeight<ScalarQT> strip_weight(const Partition& mu, const Partition& nu, DualFamily family) {
    if (!is_horizontal_strip(mu, nu)) throw std::invalid_argument("strip_weight: not a horizontal strip");
    CycloFactored phi = phi_cf(mu, nu);
    StripWeight<ScalarQT> w;
    switch (family) {
        case DualFamily::QT: {
            w.scalar = phi.expand();
            for (int i = 1; i <= mu.length(); ++i)
                for (int j = 1; j <= nu.part(i) - mu.part(i + 1); ++j)
                    w.num_roots.push_back(qt_mono(j - 1 - nu.part(i), 0) * qt_t(i));
            w.den_roots = qt_den_roots<ScalarQT>(mu.part(1), false);
            break;
        }
        case DualFamily::Whittaker: {
            w.scalar = phi.expand_t0();
            w.u_shift = nu.size() - mu.size() + mu.part(1);
            w.den_roots = qt_den_roots<ScalarQT>(mu.part(1), false);
            break;
        }
        case DualFamily::HallLittlewood: {
            w.scalar = phi.expand_q0();
            if (mu.is_empty()) break;  // weight is (u-t)/(u-t) = 1
            if (nu.length() < mu.length()) {
                w.u_shift = nu.size() - mu.size() + 1;
            } else {
                w.u_shift = nu.size() - mu.size();
                w.num_roots.push_back(qt_t(1 - mu.length()));
            }
            w.den_roots.push_back(qt_t());
            break;
        }
        default:
            throw std::invalid_argument("strip_weight: use strip_weight_jack for the Jack family");
    }
    return w;
}

StripWeight<ScalarKappa> strip_weight_jack(const Partition& mu, const Partition& nu) {
    if (!is_horizontal_strip(mu, nu)) throw std::invalid_argument("strip_weight: not a horizontal strip");
    StripWeight<ScalarKappa> w;
    w.scalar = phi_cf(mu, nu).expand_jack();
    for (int i = 1; i <= mu.length(); ++i)
        for (int j = 1; j <= nu.part(i) - mu.part(i + 1); ++j)
            w.num_roots.push_back(ScalarKappa(Int(nu.part(i) - j + 1)) - kappa() * ScalarKappa(Int(i)));
    w.den_roots = qt_den_roots<ScalarKappa>(mu.part(1), true);
    return w;
}

namespace {

// Sum over chains of per-variable strip weights, assembled over the fixed
// common denominator prod_j prod_r (u_j - r).
template <class S, class WeightFn>
RationalFn<S> dual_H_impl(const Partition& mu, int K, const std::vector<S>& common_roots,
                          WeightFn&& weight) {
    MultiPoly<S> total(K);
    std::map<S, int> common_count;
    for (const S& r : common_roots) ++common_count[r];
    for (const StripChain& chain : enumerate_rtab(mu, K)) {
        MultiPoly<S> term = MultiPoly<S>::constant(K, S(1));
        S scal(1);
        bool dead = false;
        for (int k = 1; k <= K && !dead; ++k) {
            StripWeight<S> w = weight(chain[k - 1], chain[k]);
            scal = scal * w.scalar;
            if (is_zero(scal)) {
                dead = true;
                break;
            }
            const int v = k - 1;
            auto lin = [&](const S& root) {
                MultiPoly<S> p = MultiPoly<S>::variable(K, v);
                p.add_term(std::vector<int>(K, 0), -root);
                return p;
            };
            std::map<S, int> den_count;
            for (const S& r : w.den_roots) ++den_count[r];
            int upow = std::max(0, w.u_shift);
            den_count[S(0)] += std::max(0, -w.u_shift);
            // complement of this step's denominator inside the common one
            for (const auto& [r, m] : common_count) {
                int have = den_count.count(r) ? den_count[r] : 0;
                if (have > m) throw std::logic_error("dual_H: step denominator exceeds the common one");
                for (int i = 0; i < m - have; ++i) term *= lin(r);
                den_count.erase(r);
            }
            for (const auto& [r, m] : den_count)
                if (m > 0) throw std::logic_error("dual_H: step denominator outside the common one");
            if (upow > 0) {
                std::vector<int> e(K, 0);
                e[v] = upow;
                term *= MultiPoly<S>::monomial(K, e, S(1));
            }
            for (const S& r : w.num_roots) term *= lin(r);
        }
        if (!dead) total += term.scaled(scal);
    }
    typename RationalFn<S>::FactorMap den;
    if (!total.is_zero_poly()) {
        for (int j = 0; j < K; ++j)
            for (const auto& [r, m] : common_count) den[{j, -1, r}] += m;
    }
    return RationalFn<S>(std::move(total), std::move(den));
}

}  // namespace

RatFnQT dual_H(const Partition& mu, int K, DualFamily family) {
    if (mu.length() > K) return RatFnQT(PolyQT(K));
    if (family == DualFamily::Jack) throw std::invalid_argument("dual_H: use dual_H_jack");
    std::vector<ScalarQT> common;
    if (family == DualFamily::HallLittlewood) {
        if (!mu.is_empty()) {
            common.push_back(qt_t());
            for (int i = 0; i < mu.size(); ++i) common.push_back(ScalarQT::zero());
        }
    } else {
        common = qt_den_roots<ScalarQT>(mu.part(1), false);
    }
    return dual_H_impl<ScalarQT>(mu, K, common, [&](const Partition& a, const Partition& b) {
        return strip_weight(a, b, family);
    });
}

RatFnKappa dual_H_jack(const Partition& mu, int K) {
    if (mu.length() > K) return RatFnKappa(PolyKappa(K));
    std::vector<ScalarKappa> common = qt_den_roots<ScalarKappa>(mu.part(1), true);
    return dual_H_impl<ScalarKappa>(mu, K, common, [&](const Partition& a, const Partition& b) {
        return strip_weight_jack(a, b);
    });
}

SeriesQT skew_dual_series(const Partition& mu, const Partition& nu, int order) {
    SeriesQT zero(0, 1, 0, order);
    if (!is_horizontal_strip(mu, nu)) return zero;
    StripWeight<ScalarQT> w = strip_weight(mu, nu, DualFamily::QT);
    int lead = mu.size() - nu.size();
    SeriesQT r = SeriesQT::constant(0, 1, 0, order, w.scalar);
    r = r.times_monomial({lead}, ScalarQT::one());
    for (const ScalarQT& root : w.num_roots) {
        SeriesQT f = SeriesQT::one(0, 1, 0, order);
        f.add_term({1}, -root);
        r *= f;
    }
    for (const ScalarQT& root : w.den_roots)
        r *= geometric_series<ScalarQT>(0, 1, 0, order, {1}, root);
    r *= expand_along<ScalarQT>(0, 1, 0, order, {1}, ScalarQT::one(), pochhammer_inv_coeffs(order));
    return r;
}

namespace {

// I_mu as a symmetric function expanded in the Macdonald P basis, cached.
const SymFunc& interp_I_in_P(const Partition& mu) {
    static std::map<Partition, SymFunc> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(mu);
    if (it == cache.end()) it = cache.emplace(mu, to_macdonald_P(interp_I_sym(mu))).first;
    return it->second;
}

}  // namespace

SeriesQT dual_by_duality_oracle(const Partition& nu, int K, int order) {
    if (nu.size() > order) throw std::invalid_argument("dual_by_duality_oracle: |nu| > order");
    // <I_mu, Q_lam> = coefficient of P_lam in I_mu.
    std::map<Partition, SymFunc> ip;  // I_mu in the Macdonald P basis
    for (const Partition& mu : partitions_up_to(order, order)) ip.emplace(mu, interp_I_in_P(mu));
    std::map<Partition, ScalarQT> h;
    for (int d = 0; d <= order; ++d) {
        for (const Partition& mu : partitions_of(d, d)) {
            ScalarQT v = mu == nu ? ScalarQT::one() : ScalarQT::zero();
            const SymFunc& imu = ip.at(mu);
            for (const auto& [lam, c] : imu.coef) {
                if (lam.size() >= d) continue;
                auto it = h.find(lam);
                if (it != h.end()) v -= c * it->second;
            }
            h.emplace(mu, v);
        }
    }
    SeriesQT r(0, K, 0, order);
    for (const auto& [lam, c] : h) {
        if (c.is_zero() || lam.length() > K) continue;
        r += SeriesQT::from_poly_u(macdonald_Q(lam, K), 0, 0, order).scaled(c);
    }
    return r;
}

namespace {

template <class S>
MultiPoly<S> leibniz_det(const std::vector<std::vector<MultiPoly<S>>>& m) {
    const int n = static_cast<int>(m.size());
    const int nv = m[0][0].nvars();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    MultiPoly<S> det(nv);
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        MultiPoly<S> prod = MultiPoly<S>::constant(nv, S(inv % 2 ? -1 : 1));
        for (int i = 0; i < n; ++i) prod *= m[i][perm[i]];
        det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

PolyQT divide_vandermonde(PolyQT p, int N) {
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) p = p.divide_linear(i, PolyQT::variable(N, j));
    return p;
}

}  // namespace

PolyQT multiparam_schur(const Partition& mu, int N, const std::vector<ScalarQT>& c) {
    if (mu.length() > N) return PolyQT(N);
    const int top = mu.part(1) + N - 1;
    if (static_cast<int>(c.size()) < std::max(top, 0))
        throw std::invalid_argument("multiparam_schur: not enough parameters");
    std::vector<std::vector<PolyQT>> m(N, std::vector<PolyQT>(N, PolyQT(N)));
    for (int i = 1; i <= N; ++i) {
        int deg = mu.part(i) + N - i;
        for (int j = 0; j < N; ++j) {
            PolyQT e = PolyQT::constant(N, ScalarQT::one());
            for (int n = 0; n < deg; ++n) {
                PolyQT lin = PolyQT::variable(N, j);
                lin.add_term(std::vector<int>(N, 0), -c[n]);
                e *= lin;
            }
            m[i - 1][j] = std::move(e);
        }
    }
    return divide_vandermonde(leibniz_det(m), N);
}

RatFnQT dual_sigma(const Partition& mu, int N, const std::vector<ScalarQT>& c) {
    if (mu.length() > N) return RatFnQT(PolyQT(N));
    const int top = mu.part(1) + N - 1;  // entries use c_1..c_top, c[i] = c_{i+1}
    if (static_cast<int>(c.size()) < top)
        throw std::invalid_argument("dual_sigma: not enough parameters");
    auto tail_product = [&](int from, int j) {
        // prod_{n=from}^{top} (u_j - c_n)
        PolyQT e = PolyQT::constant(N, ScalarQT::one());
        for (int n = from; n <= top; ++n) {
            PolyQT lin = PolyQT::variable(N, j);
            lin.add_term(std::vector<int>(N, 0), -c[n - 1]);
            e *= lin;
        }
        return e;
    };
    std::vector<std::vector<PolyQT>> a(N, std::vector<PolyQT>(N, PolyQT(N)));
    std::vector<std::vector<PolyQT>> b(N, std::vector<PolyQT>(N, PolyQT(N)));
    for (int i = 1; i <= N; ++i)
        for (int j = 0; j < N; ++j) {
            a[i - 1][j] = tail_product(mu.part(i) + N - i + 1, j);
            b[i - 1][j] = tail_product(N - i + 1, j);
        }
    PolyQT deta = leibniz_det(a);
    // Vandermonde-form consistency: det[B] must equal
    // (-1)^{N(N-1)/2} V(u) prod_j prod_{n=N}^{top} (u_j - c_n).
    PolyQT expect = PolyQT::constant(N, ScalarQT(((N * (N - 1) / 2) % 2) ? -1 : 1));
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            expect *= PolyQT::variable(N, i) - PolyQT::variable(N, j);
    for (int j = 0; j < N; ++j) expect *= tail_product(N, j);
    if (leibniz_det(b) != expect)
        throw std::logic_error("dual_sigma: determinant routes disagree");
    PolyQT numpoly = divide_vandermonde(std::move(deta), N);
    if ((N * (N - 1) / 2) % 2) numpoly = numpoly.scaled(ScalarQT(-1));
    RatFnQT::FactorMap den;
    if (!numpoly.is_zero_poly()) {
        for (int j = 0; j < N; ++j)
            for (int n = N; n <= top; ++n) den[{j, -1, c[n - 1]}] += 1;
    }
    return RatFnQT(std::move(numpoly), std::move(den));
}

}  // namespace symqt
