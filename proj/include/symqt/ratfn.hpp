#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "symqt/qseries.hpp"

namespace symqt {

/// Linear denominator factor: (u_var - c) when other < 0, else (u_var - u_other)
/// with var < other.
template <class S>
struct LinFactor {
    int var;
    int other;  // -1 for a scalar constant
    S c;

    bool operator<(const LinFactor& o) const {
        if (var != o.var) return var < o.var;
        if (other != o.other) return other < o.other;
        return c < o.c;
    }
    bool operator==(const LinFactor& o) const {
        return var == o.var && other == o.other && c == o.c;
    }
};

/// Multivariate rational function with an explicitly factored denominator:
/// num / prod factor^mult.  The factor list keeps linear pieces (u_j - c) and
/// (u_i - u_j); no reduction to lowest terms is attempted.
template <class S>
class RationalFn {
public:
    using Factor = LinFactor<S>;
    using FactorMap = std::map<Factor, int>;

    RationalFn() : num_(0) {}
    explicit RationalFn(MultiPoly<S> num) : num_(std::move(num)) {}
    RationalFn(MultiPoly<S> num, FactorMap den) : num_(std::move(num)), den_(std::move(den)) {
        if (num_.is_zero_poly()) den_.clear();
    }

    static RationalFn constant(int nvars, const S& c) {
        return RationalFn(MultiPoly<S>::constant(nvars, c));
    }

    int nvars() const { return num_.nvars(); }
    const MultiPoly<S>& num() const { return num_; }
    const FactorMap& den() const { return den_; }
    bool is_zero_fn() const { return num_.is_zero_poly(); }

    static MultiPoly<S> factor_poly(const Factor& f, int nvars) {
        MultiPoly<S> p = MultiPoly<S>::variable(nvars, f.var);
        if (f.other >= 0) {
            p -= MultiPoly<S>::variable(nvars, f.other);
        } else {
            p.add_term(std::vector<int>(nvars, 0), -f.c);
        }
        return p;
    }

    MultiPoly<S> den_poly() const {
        MultiPoly<S> d = MultiPoly<S>::constant(nvars(), S(1));
        for (const auto& [f, m] : den_)
            for (int i = 0; i < m; ++i) d *= factor_poly(f, nvars());
        return d;
    }

    RationalFn operator*(const RationalFn& o) const {
        RationalFn r(num_ * o.num_, den_);
        if (r.is_zero_fn()) return r;
        for (const auto& [f, m] : o.den_) r.den_[f] += m;
        return r;
    }
    RationalFn scaled(const S& c) const { return RationalFn(num_.scaled(c), den_); }

    RationalFn operator+(const RationalFn& o) const {
        if (is_zero_fn()) return o;
        if (o.is_zero_fn()) return *this;
        FactorMap common = den_;
        for (const auto& [f, m] : o.den_) {
            auto it = common.find(f);
            if (it == common.end())
                common[f] = m;
            else
                it->second = std::max(it->second, m);
        }
        MultiPoly<S> na = num_, nb = o.num_;
        for (const auto& [f, m] : common) {
            auto ita = den_.find(f);
            int ma = ita == den_.end() ? 0 : ita->second;
            auto itb = o.den_.find(f);
            int mb = itb == o.den_.end() ? 0 : itb->second;
            MultiPoly<S> fp = factor_poly(f, nvars());
            for (int i = 0; i < m - ma; ++i) na *= fp;
            for (int i = 0; i < m - mb; ++i) nb *= fp;
        }
        return RationalFn(na + nb, std::move(common));
    }
    RationalFn operator-(const RationalFn& o) const { return *this + o.scaled(S(-1)); }
    RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }

    RationalFn div_factor(const Factor& f, int m = 1) const {
        RationalFn r = *this;
        if (r.is_zero_fn()) return r;
        r.den_[canonical(f)] += m;
        return r;
    }

    /// Exact equality, by cross-multiplication over the union denominator.
    bool operator==(const RationalFn& o) const {
        MultiPoly<S> la = num_, lb = o.num_;
        for (const auto& [f, m] : o.den_) {
            auto it = den_.find(f);
            int have = it == den_.end() ? 0 : it->second;
            MultiPoly<S> fp = factor_poly(f, nvars());
            for (int i = 0; i < m - std::min(have, m); ++i) la *= fp;
        }
        for (const auto& [f, m] : den_) {
            auto it = o.den_.find(f);
            int have = it == o.den_.end() ? 0 : it->second;
            MultiPoly<S> fp = factor_poly(f, nvars());
            for (int i = 0; i < m - std::min(have, m); ++i) lb *= fp;
        }
        return la == lb;
    }
    bool operator!=(const RationalFn& o) const { return !(*this == o); }

    std::optional<S> eval(const std::vector<S>& pt) const {
        S d(1);
        for (const auto& [f, m] : den_) {
            S v = pt.at(f.var) - (f.other >= 0 ? pt.at(f.other) : f.c);
            if (is_zero(v)) return std::nullopt;
            for (int i = 0; i < m; ++i) d = d * v;
        }
        return num_.eval(pt) / d;
    }

    /// Expansion as a series in the inverse variables u_j^{-1}.  Requires a
    /// pure (u_j - c) denominator; per variable, the numerator degree must
    /// not exceed the number of denominator factors.
    TruncSeries<S> expand_u_series(int nx, int cutx, int cutu) const {
        const int K = nvars();
        std::vector<int> mult(K, 0);
        TruncSeries<S> g = TruncSeries<S>::one(nx, K, cutx, cutu);
        for (const auto& [f, m] : den_) {
            if (f.other >= 0)
                throw std::domain_error("expand_u_series: pair factor in denominator");
            mult[f.var] += m;
            for (int i = 0; i < m; ++i) {
                typename TruncSeries<S>::Expo step(nx + K, 0);
                step[nx + f.var] = 1;
                g *= geometric_series<S>(nx, K, cutx, cutu, step, f.c);
            }
        }
        // num * prod u_j^{-mult_j}, i.e. shift every exponent.
        TruncSeries<S> r(nx, K, cutx, cutu);
        for (const auto& [e, c] : num_.terms()) {
            typename TruncSeries<S>::Expo ne(nx + K, 0);
            bool ok = true;
            for (int j = 0; j < K; ++j) {
                ne[nx + j] = mult[j] - e[j];
                if (ne[nx + j] < 0) ok = false;
            }
            if (!ok) throw std::domain_error("expand_u_series: pole at infinity");
            r.add_term(ne, c);
        }
        return r * g;
    }

    /// Limit u_v -> infinity of a rational function of u-degree <= 0 in u_v:
    /// zero when the degree is negative, otherwise the leading-coefficient
    /// ratio with the v-dependence removed.
    RationalFn limit_var_to_infinity(int v) const {
        int dden = 0;
        FactorMap rest;
        for (const auto& [f, m] : den_) {
            if (f.var == v || f.other == v)
                dden += m;
            else
                rest[f] = m;
        }
        int dnum = num_.degree_in(v);
        if (dnum > dden) throw std::domain_error("limit_var_to_infinity: positive degree");
        if (dnum < dden) return RationalFn(MultiPoly<S>(nvars()));
        MultiPoly<S> lead(nvars());
        for (const auto& [e, c] : num_.terms()) {
            if (e[v] != dnum) continue;
            auto ne = e;
            ne[v] = 0;
            lead.add_term(ne, c);
        }
        // Denominator factors involving u_v have leading coefficient 1 in
        // u_v, except (u_i - u_v) with i < v which contributes -1.
        for (const auto& [f, m] : den_) {
            if (f.other == v && (m % 2) == 1) lead = lead.scaled(S(-1));
        }
        return RationalFn(std::move(lead), std::move(rest));
    }

    template <class F>
    auto map_coeffs(F&& fn) const -> RationalFn<std::decay_t<decltype(fn(std::declval<S>()))>> {
        using S2 = std::decay_t<decltype(fn(std::declval<S>()))>;
        typename RationalFn<S2>::FactorMap nd;
        for (const auto& [f, m] : den_) nd[{f.var, f.other, fn(f.c)}] += m;
        return RationalFn<S2>(num_.map_coeffs(fn), std::move(nd));
    }

    RationalFn permuted(const std::vector<int>& perm) const {
        std::vector<int> inv(perm.size());
        for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
        FactorMap r;
        int sign = 1;
        for (const auto& [f, m] : den_) {
            Factor nf{inv[f.var], f.other >= 0 ? inv[f.other] : -1, f.c};
            if (nf.other >= 0 && nf.other < nf.var) {
                std::swap(nf.var, nf.other);
                if (m % 2) sign = -sign;  // (u_i - u_j) = -(u_j - u_i)
            }
            r[nf] += m;
        }
        MultiPoly<S> n = num_.permuted(perm);
        if (sign < 0) n = n.scaled(S(-1));
        return RationalFn(std::move(n), std::move(r));
    }

    bool is_symmetric() const {
        const int K = nvars();
        for (int v = 0; v + 1 < K; ++v) {
            std::vector<int> perm(K);
            for (int i = 0; i < K; ++i) perm[i] = i;
            std::swap(perm[v], perm[v + 1]);
            if (!(*this == permuted(perm))) return false;
        }
        return true;
    }

private:
    MultiPoly<S> num_;
    FactorMap den_;

    static Factor canonical(Factor f) {
        if (f.other >= 0 && f.other < f.var) std::swap(f.var, f.other);
        return f;
    }
};

using RatFnQT = RationalFn<ScalarQT>;
using RatFnKappa = RationalFn<ScalarKappa>;

}  // namespace symqt
