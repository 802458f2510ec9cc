#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "symqt/multipoly.hpp"

namespace symqt {

/// Formal power series truncated by total degree, over a scalar field S.
/// Variables come in two blocks with independent cutoffs: a "direct" block
/// (typically x_1..x_N) and an "inverse" block (series in u_j^{-1} or y_j).
/// Every stored exponent vector satisfies both block bounds; arithmetic
/// between series takes the minimum cutoff per block.
template <class S>
class TruncSeries {
public:
    using Expo = std::vector<int>;
    using Terms = std::map<Expo, S>;

    TruncSeries() : nx_(0), nu_(0), cutx_(0), cutu_(0) {}
    TruncSeries(int nx, int nu, int cutx, int cutu) : nx_(nx), nu_(nu), cutx_(cutx), cutu_(cutu) {
        if (cutx < 0 || cutu < 0) throw std::invalid_argument("TruncSeries: negative cutoff");
    }

    static TruncSeries constant(int nx, int nu, int cutx, int cutu, const S& c) {
        TruncSeries s(nx, nu, cutx, cutu);
        if (!is_zero(c)) s.terms_[Expo(nx + nu, 0)] = c;
        return s;
    }
    static TruncSeries one(int nx, int nu, int cutx, int cutu) {
        return constant(nx, nu, cutx, cutu, S(1));
    }

    int nx() const { return nx_; }
    int nu() const { return nu_; }
    int nvars() const { return nx_ + nu_; }
    int cutoff_x() const { return cutx_; }
    int cutoff_u() const { return cutu_; }
    const Terms& terms() const { return terms_; }
    bool is_zero_series() const { return terms_.empty(); }

    int deg_x(const Expo& e) const { return std::accumulate(e.begin(), e.begin() + nx_, 0); }
    int deg_u(const Expo& e) const { return std::accumulate(e.begin() + nx_, e.end(), 0); }

    void add_term(const Expo& e, const S& c) {
        if (is_zero(c)) return;
        if (deg_x(e) > cutx_ || deg_u(e) > cutu_) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    S coeff(const Expo& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? S(0) : it->second;
    }

    TruncSeries truncated(int cx, int cu) const {
        TruncSeries r(nx_, nu_, std::min(cx, cutx_), std::min(cu, cutu_));
        for (const auto& [e, c] : terms_) r.add_term(e, c);
        return r;
    }

    TruncSeries operator+(const TruncSeries& o) const {
        TruncSeries r = aligned(o);
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    TruncSeries operator-(const TruncSeries& o) const {
        TruncSeries r = aligned(o);
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }
    TruncSeries operator*(const TruncSeries& o) const {
        check_blocks(o);
        TruncSeries r(nx_, nu_, std::min(cutx_, o.cutx_), std::min(cutu_, o.cutu_));
        for (const auto& [ea, ca] : terms_) {
            int ax = deg_x(ea), au = deg_u(ea);
            for (const auto& [eb, cb] : o.terms_) {
                if (ax + o.deg_x(eb) > r.cutx_ || au + o.deg_u(eb) > r.cutu_) continue;
                Expo e(nvars());
                for (int i = 0; i < nvars(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    TruncSeries operator-() const {
        TruncSeries r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
    TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    bool operator==(const TruncSeries& o) const {
        return nx_ == o.nx_ && nu_ == o.nu_ && cutx_ == o.cutx_ && cutu_ == o.cutu_ && terms_ == o.terms_;
    }

    TruncSeries scaled(const S& c) const {
        TruncSeries r(nx_, nu_, cutx_, cutu_);
        if (is_zero(c)) return r;
        for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
        return r;
    }

    /// Scale listed variables (absolute indices into the exponent vector) by
    /// c: the coefficient of a term picks up c^(sum of those exponents).
    TruncSeries vars_scaled(const std::vector<int>& vars, const S& c) const {
        TruncSeries r(nx_, nu_, cutx_, cutu_);
        for (const auto& [e, v] : terms_) {
            int d = 0;
            for (int i : vars) d += e[i];
            S f(1);
            for (int k = 0; k < d; ++k) f = f * c;
            r.add_term(e, v * f);
        }
        return r;
    }

    TruncSeries times_monomial(const Expo& m, const S& c) const {
        TruncSeries r(nx_, nu_, cutx_, cutu_);
        for (const auto& [e, v] : terms_) {
            Expo ne(nvars());
            for (int i = 0; i < nvars(); ++i) ne[i] = e[i] + m[i];
            r.add_term(ne, v * c);
        }
        return r;
    }

    /// Multiplicative inverse; requires an invertible constant term.
    TruncSeries inverse() const {
        Expo zero(nvars(), 0);
        S c0 = coeff(zero);
        if (is_zero(c0)) throw std::domain_error("TruncSeries: inverse needs nonzero constant term");
        S c0inv = S(1) / c0;
        TruncSeries g = scaled(c0inv);
        g.terms_.erase(zero);  // g = (series - c0)/c0, order >= 1
        TruncSeries r = one(nx_, nu_, cutx_, cutu_);
        TruncSeries p = one(nx_, nu_, cutx_, cutu_);
        int maxord = cutx_ + cutu_;
        for (int k = 1; k <= maxord; ++k) {
            p = p * g;
            if (p.is_zero_series()) break;
            if (k % 2 == 1)
                r -= p;
            else
                r += p;
        }
        return r.scaled(c0inv);
    }

    TruncSeries operator/(const TruncSeries& o) const { return *this * o.inverse(); }

    /// First difference against another series, if any: exponent plus the two
    /// coefficient values.  Comparison runs over the common cutoffs.
    std::optional<std::tuple<Expo, S, S>> first_difference(const TruncSeries& o) const {
        check_blocks(o);
        int cx = std::min(cutx_, o.cutx_), cu = std::min(cutu_, o.cutu_);
        std::map<Expo, std::pair<S, S>> both;
        for (const auto& [e, c] : terms_)
            if (deg_x(e) <= cx && deg_u(e) <= cu) both[e].first = c;
        for (const auto& [e, c] : o.terms_)
            if (deg_x(e) <= cx && deg_u(e) <= cu) both[e].second = c;
        for (const auto& [e, pr] : both)
            if (pr.first != pr.second) return std::make_tuple(e, pr.first, pr.second);
        return std::nullopt;
    }

    template <class F>
    auto map_coeffs(F&& f) const -> TruncSeries<std::decay_t<decltype(f(std::declval<S>()))>> {
        using S2 = std::decay_t<decltype(f(std::declval<S>()))>;
        TruncSeries<S2> r(nx_, nu_, cutx_, cutu_);
        for (const auto& [e, c] : terms_) r.add_term(e, f(c));
        return r;
    }

    /// Embed a polynomial in the x-block (u-exponents zero).
    static TruncSeries from_poly_x(const MultiPoly<S>& p, int nu, int cutx, int cutu) {
        TruncSeries r(p.nvars(), nu, cutx, cutu);
        for (const auto& [e, c] : p.terms()) {
            Expo ne = e;
            ne.resize(p.nvars() + nu, 0);
            r.add_term(ne, c);
        }
        return r;
    }
    /// Embed a polynomial in the u-block (x-exponents zero).
    static TruncSeries from_poly_u(const MultiPoly<S>& p, int nx, int cutx, int cutu) {
        TruncSeries r(nx, p.nvars(), cutx, cutu);
        for (const auto& [e, c] : p.terms()) {
            Expo ne(nx, 0);
            ne.insert(ne.end(), e.begin(), e.end());
            r.add_term(ne, c);
        }
        return r;
    }

private:
    int nx_, nu_;
    int cutx_, cutu_;
    Terms terms_;

    void check_blocks(const TruncSeries& o) const {
        if (nx_ != o.nx_ || nu_ != o.nu_) throw std::invalid_argument("TruncSeries: block mismatch");
    }
    TruncSeries aligned(const TruncSeries& o) const {
        check_blocks(o);
        return truncated(std::min(cutx_, o.cutx_), std::min(cutu_, o.cutu_));
    }
};

using SeriesQT = TruncSeries<ScalarQT>;
using SeriesKappa = TruncSeries<ScalarKappa>;

}  // namespace symqt
