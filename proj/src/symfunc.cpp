#include "symqt/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace symqt {

SymFunc SymFunc::unit(SymBasis b, const Partition& mu, int bound) {
    SymFunc f{b, bound, {}};
    f.coef[mu] = ScalarQT::one();
    return f;
}

void SymFunc::add(const Partition& mu, const ScalarQT& c) {
    if (c.is_zero()) return;
    auto it = coef.find(mu);
    if (it == coef.end()) {
        coef.emplace(mu, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coef.erase(it);
    }
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    if (basis != o.basis) throw std::invalid_argument("SymFunc: basis mismatch");
    SymFunc r = *this;
    r.degree_bound = std::min(degree_bound, o.degree_bound);
    for (const auto& [mu, c] : o.coef) r.add(mu, c);
    return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const {
    if (basis != o.basis) throw std::invalid_argument("SymFunc: basis mismatch");
    SymFunc r = *this;
    r.degree_bound = std::min(degree_bound, o.degree_bound);
    for (const auto& [mu, c] : o.coef) r.add(mu, -c);
    return r;
}

SymFunc SymFunc::scaled(const ScalarQT& c) const {
    SymFunc r{basis, degree_bound, {}};
    for (const auto& [mu, v] : coef) r.add(mu, v * c);
    return r;
}

Int z_lambda(const Partition& lam) {
    Int z = 1;
    int run = 0;
    for (int i = 1; i <= lam.length(); ++i) {
        z *= lam.part(i);
        run = (i > 1 && lam.part(i) == lam.part(i - 1)) ? run + 1 : 1;
        z *= run;
    }
    return z;
}

ScalarQT power_sum_norm(const Partition& lam) {
    ScalarQT r{Rat(z_lambda(lam))};
    for (int i = 1; i <= lam.length(); ++i) {
        int k = lam.part(i);
        r *= (ScalarQT::one() - qt_q(k)) / (ScalarQT::one() - qt_t(k));
    }
    return r;
}

namespace {

PolyQT monomial_sym_poly(const Partition& lam, int N) {
    PolyQT r(N);
    if (lam.length() > N) return r;
    std::vector<int> e(N, 0);
    for (int i = 1; i <= lam.length(); ++i) e[i - 1] = lam.part(i);
    std::sort(e.begin(), e.end());
    do {
        r.add_term(e, ScalarQT::one());
    } while (std::next_permutation(e.begin(), e.end()));
    return r;
}

PolyQT power_sum_poly(const Partition& lam, int N) {
    PolyQT r = PolyQT::constant(N, ScalarQT::one());
    for (int i = 1; i <= lam.length(); ++i) {
        PolyQT pk(N);
        for (int v = 0; v < N; ++v) {
            std::vector<int> e(N, 0);
            e[v] = lam.part(i);
            pk.add_term(e, ScalarQT::one());
        }
        r *= pk;
    }
    return r;
}

// Transition p_rho = sum_lam A[rho][lam] m_lam within a fixed degree, and the
// inverse of A^T over Q, cached per degree.
struct PTransition {
    std::vector<Partition> parts;              // partitions of d, lex decreasing
    std::vector<std::vector<Rat>> inv_at;      // inverse of A^T
};

const PTransition& p_transition(int d) {
    static std::map<int, PTransition> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    PTransition tr;
    tr.parts = partitions_of(d, std::max(d, 1));
    const int n = static_cast<int>(tr.parts.size());
    const int N = std::max(d, 1);
    // A[rho][lam]: integer coefficients of the monomial expansion of p_rho.
    std::vector<std::vector<Rat>> at(n, std::vector<Rat>(n, Rat(0)));
    for (int r = 0; r < n; ++r) {
        PolyQT p = power_sum_poly(tr.parts[r], N);
        for (int l = 0; l < n; ++l) {
            std::vector<int> e(N, 0);
            for (int i = 1; i <= tr.parts[l].length(); ++i) e[i - 1] = tr.parts[l].part(i);
            auto c = p.coeff(e).as_rational();
            at[l][r] = c ? *c : Rat(0);  // transpose on the fly
        }
    }
    // Gauss-Jordan inverse of A^T.
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (at[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::logic_error("p_transition: singular matrix");
        std::swap(at[piv], at[col]);
        std::swap(inv[piv], inv[col]);
        Rat d0 = at[col][col];
        for (int c = 0; c < n; ++c) {
            at[col][c] /= d0;
            inv[col][c] /= d0;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || at[r][col] == 0) continue;
            Rat f = at[r][col];
            for (int c = 0; c < n; ++c) {
                at[r][c] -= f * at[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    tr.inv_at = std::move(inv);
    return cache.emplace(d, std::move(tr)).first->second;
}

SymFunc monomial_to_power_sum(const SymFunc& f) {
    SymFunc r = SymFunc::zero(SymBasis::PowerSum, f.degree_bound);
    std::map<int, std::map<Partition, ScalarQT>> by_deg;
    for (const auto& [mu, c] : f.coef) by_deg[mu.size()][mu] = c;
    for (const auto& [d, layer] : by_deg) {
        const PTransition& tr = p_transition(d);
        const int n = static_cast<int>(tr.parts.size());
        std::vector<ScalarQT> rhs(n, ScalarQT::zero());
        for (int l = 0; l < n; ++l) {
            auto it = layer.find(tr.parts[l]);
            if (it != layer.end()) rhs[l] = it->second;
        }
        for (int i = 0; i < n; ++i) {
            ScalarQT ci = ScalarQT::zero();
            for (int l = 0; l < n; ++l) {
                if (tr.inv_at[i][l] == 0 || rhs[l].is_zero()) continue;
                ci += rhs[l] * ScalarQT(tr.inv_at[i][l]);
            }
            r.add(tr.parts[i], ci);
        }
    }
    return r;
}

SymFunc power_sum_to_monomial(const SymFunc& f) {
    SymFunc r = SymFunc::zero(SymBasis::Monomial, f.degree_bound);
    const int N = std::max(f.degree_bound, 1);
    std::map<int, PolyQT> by_deg;
    for (const auto& [mu, c] : f.coef) {
        int d = mu.size();
        auto it = by_deg.find(d);
        if (it == by_deg.end()) it = by_deg.emplace(d, PolyQT(N)).first;
        it->second += power_sum_poly(mu, N).scaled(c);
    }
    for (const auto& [d, poly] : by_deg) {
        for (const Partition& lam : partitions_of(d, N)) {
            std::vector<int> e(N, 0);
            for (int i = 1; i <= lam.length(); ++i) e[i - 1] = lam.part(i);
            r.add(lam, poly.coeff(e));
        }
    }
    return r;
}

}  // namespace

PolyQT sym_to_poly(const SymFunc& f, int N) {
    const SymFunc m = to_monomial(f);
    PolyQT r(N);
    for (const auto& [mu, c] : m.coef) r += monomial_sym_poly(mu, N).scaled(c);
    return r;
}

SymFunc poly_to_monomial_sym(const PolyQT& p, int degree_bound) {
    SymFunc r = SymFunc::zero(SymBasis::Monomial, degree_bound);
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> s = e;
        std::sort(s.begin(), s.end(), std::greater<int>());
        while (!s.empty() && s.back() == 0) s.pop_back();
        bool sorted = std::equal(s.begin(), s.end(), e.begin());
        if (sorted) r.add(Partition(s), c);
    }
    return r;
}

SymFunc to_monomial(const SymFunc& f) {
    switch (f.basis) {
        case SymBasis::Monomial:
            return f;
        case SymBasis::PowerSum:
            return power_sum_to_monomial(f);
        case SymBasis::MacdonaldP:
        case SymBasis::MacdonaldQ: {
            SymFunc r = SymFunc::zero(SymBasis::Monomial, f.degree_bound);
            for (const auto& [mu, c] : f.coef) {
                ScalarQT cc = c;
                if (f.basis == SymBasis::MacdonaldQ) cc *= b_norm_cf(mu).expand();
                const SymFunc& p = gram_schmidt_P(mu);
                for (const auto& [lam, v] : p.coef) r.add(lam, v * cc);
            }
            return r;
        }
    }
    throw std::logic_error("to_monomial: bad basis");
}

SymFunc to_power_sum(const SymFunc& f) {
    if (f.basis == SymBasis::PowerSum) return f;
    return monomial_to_power_sum(to_monomial(f));
}

SymFunc to_macdonald_P(const SymFunc& f) {
    if (f.basis == SymBasis::MacdonaldP) return f;
    SymFunc m = to_monomial(f);
    SymFunc r = SymFunc::zero(SymBasis::MacdonaldP, f.degree_bound);
    // Peel lex-largest monomials; P_lam = m_lam + lex-smaller terms.
    while (!m.coef.empty()) {
        auto it = std::prev(m.coef.end());
        Partition lam = it->first;
        ScalarQT c = it->second;
        r.add(lam, c);
        const SymFunc& p = gram_schmidt_P(lam);
        for (const auto& [rho, v] : p.coef) m.add(rho, -(v * c));
    }
    return r;
}

ScalarQT scalar_product(const SymFunc& f, const SymFunc& g) {
    SymFunc fp = to_power_sum(f), gp = to_power_sum(g);
    ScalarQT r = ScalarQT::zero();
    for (const auto& [lam, cf] : fp.coef) {
        auto it = gp.coef.find(lam);
        if (it == gp.coef.end()) continue;
        r += cf * it->second * power_sum_norm(lam);
    }
    return r;
}

const SymFunc& gram_schmidt_P(const Partition& mu) {
    static std::map<Partition, SymFunc> cache;
    static std::recursive_mutex mtx;
    std::lock_guard<std::recursive_mutex> lock(mtx);
    auto it = cache.find(mu);
    if (it != cache.end()) return it->second;

    const int d = mu.size();
    // Process partitions of d in increasing lex order; lex order refines
    // dominance, so every P below mu is available when needed.
    std::vector<Partition> parts = partitions_of(d, std::max(d, 1));
    std::reverse(parts.begin(), parts.end());
    for (const Partition& lam : parts) {
        if (cache.count(lam)) continue;
        SymFunc p = SymFunc::unit(SymBasis::Monomial, lam, d);
        for (const Partition& rho : parts) {
            if (!(rho < lam)) break;
            const SymFunc& prho = cache.at(rho);
            ScalarQT num = scalar_product(p, prho);
            if (num.is_zero()) continue;
            ScalarQT den = scalar_product(prho, prho);
            p = p - prho.scaled(num / den);
        }
        cache.emplace(lam, std::move(p));
        if (lam == mu) break;
    }
    return cache.at(mu);
}

ScalarQT macdonald_P_norm(const Partition& mu) {
    const SymFunc& p = gram_schmidt_P(mu);
    return scalar_product(p, p);
}

}  // namespace symqt
