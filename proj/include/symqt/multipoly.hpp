#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "symqt/scalar.hpp"

namespace symqt {

/// Sparse polynomial in a fixed number of variables over a scalar field S.
/// Exponent vectors always have length nvars(); no zero coefficients are
/// stored.
template <class S>
class MultiPoly {
public:
    using Expo = std::vector<int>;
    using Terms = std::map<Expo, S>;

    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(int nvars) : nvars_(nvars) {}
    MultiPoly(int nvars, const S& c) : nvars_(nvars) {
        if (!is_zero(c)) terms_[Expo(nvars, 0)] = c;
    }

    static MultiPoly constant(int nvars, const S& c) { return MultiPoly(nvars, c); }
    static MultiPoly variable(int nvars, int v, const S& c = S(1)) {
        MultiPoly p(nvars);
        Expo e(nvars, 0);
        e.at(v) = 1;
        if (!is_zero(c)) p.terms_[e] = c;
        return p;
    }
    static MultiPoly monomial(int nvars, Expo e, const S& c) {
        MultiPoly p(nvars);
        if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("MultiPoly: exponent size");
        if (!is_zero(c)) p.terms_[std::move(e)] = c;
        return p;
    }

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero_poly() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
        return d;
    }
    int degree_in(int v) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
        return d;
    }

    void add_term(const Expo& e, const S& c) {
        if (is_zero(c)) return;
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

    MultiPoly operator+(const MultiPoly& o) const {
        check_vars(o);
        MultiPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const {
        check_vars(o);
        MultiPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }
    MultiPoly operator*(const MultiPoly& o) const {
        check_vars(o);
        MultiPoly r(nvars_);
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) {
                Expo e(nvars_);
                for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly scaled(const S& c) const {
        MultiPoly r(nvars_);
        if (is_zero(c)) return r;
        for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
        return r;
    }

    /// x_v -> c * x_v.
    MultiPoly var_scaled(int v, const S& c) const {
        MultiPoly r(nvars_);
        for (const auto& [e, coef] : terms_) {
            S nc = coef * pow_scalar(c, e[v]);
            if (!is_zero(nc)) r.terms_[e] = nc;
        }
        return r;
    }

    /// Scale every variable in [first, last) by c (q-shift on a subset).
    MultiPoly vars_scaled(const std::vector<int>& vars, const S& c) const {
        MultiPoly r(nvars_);
        for (const auto& [e, coef] : terms_) {
            int d = 0;
            for (int v : vars) d += e[v];
            S nc = coef * pow_scalar(c, d);
            if (!is_zero(nc)) r.terms_[e] = nc;
        }
        return r;
    }

    /// Substitute x_v = value (exponent folded into the coefficient; the
    /// variable slot remains with exponent 0).
    MultiPoly subs_var(int v, const S& value) const {
        MultiPoly r(nvars_);
        for (const auto& [e, coef] : terms_) {
            Expo ne = e;
            ne[v] = 0;
            r.add_term(ne, coef * pow_scalar(value, e[v]));
        }
        return r;
    }

    /// Substitute x_v -> x_v + shift (binomial expansion).
    MultiPoly subs_var_affine(int v, const S& shift) const {
        MultiPoly r(nvars_);
        for (const auto& [e, coef] : terms_) {
            const int n = e[v];
            S binom(1);
            S spow(1);
            for (int k = n; k >= 0; --k) {
                Expo ne = e;
                ne[v] = k;
                r.add_term(ne, coef * binom * spow);
                if (k > 0) {
                    binom = binom * S(k) / S(n - k + 1);
                    spow = spow * shift;
                }
            }
        }
        return r;
    }

    /// Substitute x_v by a polynomial (which must not involve x_v).
    MultiPoly subs_var_poly(int v, const MultiPoly& value) const {
        check_vars(value);
        if (value.degree_in(v) > 0) throw std::invalid_argument("subs_var_poly: self-reference");
        MultiPoly r(nvars_);
        for (const auto& [e, coef] : terms_) {
            Expo ne = e;
            ne[v] = 0;
            MultiPoly term = MultiPoly::monomial(nvars_, ne, coef);
            MultiPoly p = value.pow(e[v]);
            r += term * p;
        }
        return r;
    }

    MultiPoly pow(int n) const {
        if (n < 0) throw std::invalid_argument("MultiPoly::pow: negative exponent");
        MultiPoly r = constant(nvars_, S(1));
        MultiPoly b = *this;
        while (n > 0) {
            if (n & 1) r *= b;
            n >>= 1;
            if (n > 0) b *= b;
        }
        return r;
    }

    /// Remove a variable slot that the polynomial does not use.
    MultiPoly drop_var(int v) const {
        MultiPoly r(nvars_ - 1);
        for (const auto& [e, c] : terms_) {
            if (e[v] != 0) throw std::invalid_argument("drop_var: variable in use");
            Expo ne;
            ne.reserve(nvars_ - 1);
            for (int i = 0; i < nvars_; ++i)
                if (i != v) ne.push_back(e[i]);
            r.terms_[std::move(ne)] = c;
        }
        return r;
    }

    /// Add extra variable slots at the end.
    MultiPoly extended(int extra) const {
        MultiPoly r(nvars_ + extra);
        for (const auto& [e, c] : terms_) {
            Expo ne = e;
            ne.resize(nvars_ + extra, 0);
            r.terms_[std::move(ne)] = c;
        }
        return r;
    }

    /// Rearrange variables: new variable i corresponds to old variable
    /// perm[i]; perm must be a permutation of 0..nvars-1.
    MultiPoly permuted(const std::vector<int>& perm) const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            Expo ne(nvars_);
            for (int i = 0; i < nvars_; ++i) ne[i] = e[perm[i]];
            r.terms_[std::move(ne)] = c;
        }
        return r;
    }

    bool is_symmetric() const {
        for (int v = 0; v + 1 < nvars_; ++v) {
            std::vector<int> perm(nvars_);
            for (int i = 0; i < nvars_; ++i) perm[i] = i;
            std::swap(perm[v], perm[v + 1]);
            if (permuted(perm) != *this) return false;
        }
        return true;
    }

    MultiPoly homogeneous_component(int d) const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_)
            if (std::accumulate(e.begin(), e.end(), 0) == d) r.terms_[e] = c;
        return r;
    }

    S eval(const std::vector<S>& point) const {
        if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("eval: dimension mismatch");
        S r(0);
        for (const auto& [e, c] : terms_) {
            S m = c;
            for (int i = 0; i < nvars_; ++i) m = m * pow_scalar(point[i], e[i]);
            r = r + m;
        }
        return r;
    }

    /// Exact division by (x_v - g) where g does not involve x_v; throws if
    /// the division leaves a remainder.
    MultiPoly divide_linear(int v, const MultiPoly& g) const {
        if (g.degree_in(v) > 0) throw std::invalid_argument("divide_linear: divisor uses the variable");
        int d = degree_in(v);
        if (d < 0) {
            if (!is_zero_poly()) throw std::domain_error("divide_linear: nonzero remainder");
            return *this;
        }
        // Coefficients of powers of x_v.
        std::vector<MultiPoly> cs(d + 1, MultiPoly(nvars_));
        for (const auto& [e, c] : terms_) {
            Expo ne = e;
            int k = ne[v];
            ne[v] = 0;
            cs[k].add_term(ne, c);
        }
        MultiPoly quot(nvars_);
        MultiPoly carry(nvars_);  // b_k during synthetic division
        for (int k = d; k >= 1; --k) {
            MultiPoly bk = cs[k] + carry;
            quot += bk * variable(nvars_, v).pow_fast(k - 1);
            carry = bk * g;
        }
        MultiPoly rem = cs[0] + carry;
        if (!rem.is_zero_poly()) throw std::domain_error("divide_linear: nonzero remainder");
        return quot;
    }

    /// Exact division by the monomial prod x_i^{e_i}.
    MultiPoly divide_monomial(const Expo& m) const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            Expo ne = e;
            for (int i = 0; i < nvars_; ++i) {
                ne[i] -= m[i];
                if (ne[i] < 0) throw std::domain_error("divide_monomial: not divisible");
            }
            r.terms_[std::move(ne)] = c;
        }
        return r;
    }

    /// Coefficient polynomials of powers of variable v (v-slot zeroed).
    std::vector<MultiPoly> collect(int v) const {
        std::vector<MultiPoly> cs(std::max(degree_in(v), -1) + 1, MultiPoly(nvars_));
        for (const auto& [e, c] : terms_) {
            Expo ne = e;
            int k = ne[v];
            ne[v] = 0;
            cs[k].add_term(ne, c);
        }
        return cs;
    }

    MultiPoly pow_fast(int n) const { return pow(n); }

    /// Map every coefficient through f (used for scalar specializations).
    template <class F>
    auto map_coeffs(F&& f) const -> MultiPoly<std::decay_t<decltype(f(std::declval<S>()))>> {
        using S2 = std::decay_t<decltype(f(std::declval<S>()))>;
        MultiPoly<S2> r(nvars_);
        for (const auto& [e, c] : terms_) r.add_term(e, f(c));
        return r;
    }

    std::string str(const std::function<std::string(const S&)>& coef_str,
                    const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) out += " + ";
            first = false;
            out += "(" + coef_str(c) + ")";
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                out += "*" + names[i];
                if (e[i] > 1) out += "^" + std::to_string(e[i]);
            }
        }
        return out;
    }

private:
    int nvars_;
    Terms terms_;

    void check_vars(const MultiPoly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
    }

    static S pow_scalar(const S& s, int e) {
        if (e == 0) return S(1);
        S r(1);
        S b = s;
        int n = e;
        while (n > 0) {
            if (n & 1) r = r * b;
            b = b * b;
            n >>= 1;
        }
        return r;
    }
};

using PolyQT = MultiPoly<ScalarQT>;
using PolyKappa = MultiPoly<ScalarKappa>;

}  // namespace symqt
