#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symqt/bipoly.hpp"

namespace symqt {

/// Element of the fraction field of BiPoly, kept in factored form:
///
///   value = unit * v0^d0 * v1^d1 * prod f^e,   unit in Q, e in Z \ {0},
///
/// where every atom f is a primitive, non-monomial polynomial with positive
/// leading sign.  Products and inverses only touch exponents; sums produce a
/// single new numerator atom which is then cancelled against the denominator
/// atoms by trial division (plus a small gcd pass).  Representations are not
/// canonical; equality is decided exactly by cross-multiplication.
template <class Tag>
class Frac {
public:
    Frac() : unit_(0) {}
    explicit Frac(long v) : unit_(v) {}
    explicit Frac(const Int& v) : unit_(v) {}
    explicit Frac(const Rat& v) : unit_(v) {}
    explicit Frac(const BiPoly& n) : unit_(1) {
        if (n.is_zero()) {
            unit_ = 0;
            return;
        }
        push_factor(n, 1);
    }
    Frac(const BiPoly& n, const BiPoly& d) : unit_(1) {
        if (d.is_zero()) throw std::domain_error("Frac: zero denominator");
        if (n.is_zero()) {
            unit_ = 0;
            return;
        }
        push_factor(n, 1);
        push_factor(d, -1);
        reduce();
    }

    static Frac zero() { return Frac(); }
    static Frac one() { return Frac(1); }
    /// v0^e0 * v1^e1 with signed exponents.
    static Frac monomial(int e0, int e1, Int c = Int(1)) {
        Frac f{Rat(std::move(c))};
        f.d0_ = e0;
        f.d1_ = e1;
        if (f.unit_ == 0) f.d0_ = f.d1_ = 0;
        return f;
    }
    static Frac var0_pow(int e) { return monomial(e, 0); }
    static Frac var1_pow(int e) { return monomial(0, e); }

    bool is_zero() const { return unit_ == 0; }
    /// Representation-level test; normalization collapses the common cases.
    bool is_one() const { return unit_ == 1 && d0_ == 0 && d1_ == 0 && fac_.empty(); }

    /// Numerator/denominator of the expanded representation.
    BiPoly num() const {
        BiPoly r(boost::multiprecision::numerator(unit_));
        if (d0_ > 0 || d1_ > 0) r = r.times_monomial(std::max(d0_, 0), std::max(d1_, 0));
        for (const auto& [f, e] : fac_)
            for (int i = 0; i < e; ++i) r = r * f;
        return r;
    }
    BiPoly den() const {
        BiPoly r(boost::multiprecision::denominator(unit_));
        if (d0_ < 0 || d1_ < 0) r = r.times_monomial(std::max(-d0_, 0), std::max(-d1_, 0));
        for (const auto& [f, e] : fac_)
            for (int i = 0; i < -e; ++i) r = r * f;
        return r;
    }

    Frac operator*(const Frac& o) const {
        if (is_zero() || o.is_zero()) return Frac();
        Frac r = *this;
        r.unit_ *= o.unit_;
        r.d0_ += o.d0_;
        r.d1_ += o.d1_;
        for (const auto& [f, e] : o.fac_) r.add_exp(f, e);
        return r;
    }
    Frac inverse() const {
        if (is_zero()) throw std::domain_error("Frac: inverse of zero");
        Frac r = *this;
        r.unit_ = Rat(1) / r.unit_;
        r.d0_ = -r.d0_;
        r.d1_ = -r.d1_;
        for (auto& [f, e] : r.fac_) e = -e;
        return r;
    }
    Frac operator/(const Frac& o) const { return *this * o.inverse(); }
    Frac operator-() const {
        Frac r = *this;
        r.unit_ = -r.unit_;
        return r;
    }

    Frac operator+(const Frac& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        // Common monomial part and common denominator atoms.
        Frac r;
        r.unit_ = Rat(1, boost::multiprecision::denominator(unit_) *
                             boost::multiprecision::denominator(o.unit_));
        r.d0_ = std::min(d0_, o.d0_);
        r.d1_ = std::min(d1_, o.d1_);
        std::map<BiPoly, int> need;  // common denominator multiplicities
        for (const auto& [f, e] : fac_)
            if (e < 0) need[f] = -e;
        for (const auto& [f, e] : o.fac_)
            if (e < 0) need[f] = std::max(need[f], -e);
        BiPoly sa = side_poly(*this, o, need, r.d0_, r.d1_);
        BiPoly sb = side_poly(o, *this, need, r.d0_, r.d1_);
        BiPoly s = sa + sb;
        if (s.is_zero()) return Frac();
        for (const auto& [f, m] : need) r.fac_[f] = -m;
        r.push_factor(s, 1);
        r.reduce();
        return r;
    }
    Frac operator-(const Frac& o) const { return *this + (-o); }

    Frac& operator+=(const Frac& o) { return *this = *this + o; }
    Frac& operator-=(const Frac& o) { return *this = *this - o; }
    Frac& operator*=(const Frac& o) { return *this = *this * o; }
    Frac& operator/=(const Frac& o) { return *this = *this / o; }

    bool operator==(const Frac& o) const {
        if (unit_ == o.unit_ && d0_ == o.d0_ && d1_ == o.d1_ && fac_ == o.fac_) return true;
        return (*this - o).is_zero();
    }
    bool operator!=(const Frac& o) const { return !(*this == o); }
    /// Representation order, for use as a map key.
    bool operator<(const Frac& o) const {
        if (unit_ != o.unit_) return unit_ < o.unit_;
        if (d0_ != o.d0_) return d0_ < o.d0_;
        if (d1_ != o.d1_) return d1_ < o.d1_;
        return fac_ < o.fac_;
    }

    Frac pow(int e) const {
        if (e == 0) return one();
        if (is_zero()) {
            if (e < 0) throw std::domain_error("Frac: negative power of zero");
            return Frac();
        }
        Frac r = *this;
        r.unit_ = rat_pow(unit_, e);
        r.d0_ *= e;
        r.d1_ *= e;
        for (auto& [f, ex] : r.fac_) ex *= e;
        return r;
    }

    std::optional<Rat> eval(const Rat& v0, const Rat& v1) const {
        if (is_zero()) return Rat(0);
        // Any vanishing denominator piece disqualifies the point.
        if ((v0 == 0 && d0_ < 0) || (v1 == 0 && d1_ < 0)) return std::nullopt;
        std::vector<std::pair<Rat, int>> vals;
        vals.reserve(fac_.size());
        bool num_zero = (v0 == 0 && d0_ > 0) || (v1 == 0 && d1_ > 0);
        for (const auto& [f, e] : fac_) {
            Rat v = *f.eval(v0, v1);
            if (v == 0) {
                if (e < 0) return std::nullopt;
                num_zero = true;
            } else {
                vals.emplace_back(v, e);
            }
        }
        if (num_zero) return Rat(0);
        Rat r = unit_;
        if (d0_ != 0) r *= rat_pow(v0, d0_);
        if (d1_ != 0) r *= rat_pow(v1, d1_);
        for (const auto& [v, e] : vals) r *= rat_pow(v, e);
        return r;
    }

    /// Substitute the second variable by the first (t := q).
    Frac subs_var1_to_var0() const {
        return map_atoms([](const BiPoly& f) { return f.subs_var1_to_var0(); }, d0_ + d1_, 0);
    }
    /// First variable set to zero; throws when a denominator atom vanishes.
    Frac subs_var0_zero() const {
        if (d0_ < 0) throw std::domain_error("Frac: denominator vanishes at 0");
        if (d0_ > 0) return Frac();
        return map_atoms([](const BiPoly& f) { return f.subs_var0_zero(); }, 0, d1_);
    }
    Frac subs_var1_zero() const {
        if (d1_ < 0) throw std::domain_error("Frac: denominator vanishes at 0");
        if (d1_ > 0) return Frac();
        return map_atoms([](const BiPoly& f) { return f.subs_var1_zero(); }, d0_, 0);
    }
    /// (v0,v1) -> (1/v0,1/v1).
    Frac subs_inverted() const {
        if (is_zero()) return Frac();
        Frac r;
        r.unit_ = unit_;
        r.d0_ = -d0_;
        r.d1_ = -d1_;
        for (const auto& [f, e] : fac_) {
            int a0 = f.degree(0), a1 = f.degree(1);
            r.d0_ -= e * a0;
            r.d1_ -= e * a1;
            r.push_factor(f.reversed(a0, a1), e);
        }
        return r;
    }

    std::optional<Rat> as_rational() const {
        if (is_zero()) return Rat(0);
        if (d0_ == 0 && d1_ == 0 && fac_.empty()) return unit_;
        return std::nullopt;
    }

    std::string str() const {
        BiPoly n = num(), d = den();
        std::string s = n.str(Tag::name0(), Tag::name1());
        if (d.is_one()) return s;
        return "(" + s + ")/(" + d.str(Tag::name0(), Tag::name1()) + ")";
    }

private:
    Rat unit_;
    int d0_ = 0, d1_ = 0;
    std::map<BiPoly, int> fac_;

    void add_exp(const BiPoly& f, int e) {
        if (e == 0) return;
        auto it = fac_.find(f);
        if (it == fac_.end()) {
            fac_.emplace(f, e);
        } else {
            it->second += e;
            if (it->second == 0) fac_.erase(it);
        }
    }

    // Normalize a factor (strip monomial and integer content, fix sign) and
    // merge it in with exponent e.
    void push_factor(const BiPoly& f0, int e) {
        if (e == 0) return;
        if (f0.is_zero()) {
            unit_ = 0;
            d0_ = d1_ = 0;
            fac_.clear();
            return;
        }
        BiPoly f = f0;
        auto m = f.min_exponents();
        if (m[0] > 0 || m[1] > 0) {
            f = f.times_monomial(-m[0], -m[1]);
            d0_ += e * m[0];
            d1_ += e * m[1];
        }
        Int c = f.content();
        if (c != 1) {
            f = *BiPoly::try_divide(f, BiPoly(c));
            unit_ *= rat_pow(Rat(c), e);
        }
        if (f.is_one()) return;
        add_exp(f, e);
    }

    // Numerator contribution of `a` over the common denominator.
    static BiPoly side_poly(const Frac& a, const Frac& b, const std::map<BiPoly, int>& need,
                            int md0, int md1) {
        BiPoly s(boost::multiprecision::numerator(a.unit_) *
                 boost::multiprecision::denominator(b.unit_));
        s = s.times_monomial(a.d0_ - md0, a.d1_ - md1);
        for (const auto& [f, m] : need) {
            auto it = a.fac_.find(f);
            int have = it == a.fac_.end() ? 0 : it->second;
            for (int i = 0; i < m + std::min(have, 0); ++i) s = s * f;
        }
        for (const auto& [f, e] : a.fac_) {
            for (int i = 0; i < e; ++i) s = s * f;  // numerator atoms only
        }
        return s;
    }

    // Cancel numerator atoms against denominator atoms.
    void reduce() {
        bool changed = true;
        int guard = 0;
        while (changed && ++guard < 32) {
            changed = false;
            for (auto itn = fac_.begin(); itn != fac_.end() && !changed; ++itn) {
                if (itn->second <= 0) continue;
                if (itn->first.total_degree() == 0) continue;
                for (auto itd = fac_.begin(); itd != fac_.end() && !changed; ++itd) {
                    if (itd->second >= 0) continue;
                    // Full-atom cancellation first, then a partial gcd step.
                    if (auto q = BiPoly::try_divide(itn->first, itd->first)) {
                        BiPoly nf = itn->first, df = itd->first;
                        add_exp(nf, -1);
                        add_exp(df, 1);
                        push_factor(*q, 1);
                        changed = true;
                        break;
                    }
                    BiPoly g = BiPoly::gcd(itn->first, itd->first);
                    if (g.total_degree() > 0) {
                        BiPoly nf = itn->first, df = itd->first;
                        BiPoly qn = *BiPoly::try_divide(nf, g);
                        BiPoly qd = *BiPoly::try_divide(df, g);
                        add_exp(nf, -1);
                        add_exp(df, 1);
                        push_factor(qn, 1);
                        push_factor(qd, -1);
                        changed = true;
                        break;
                    }
                }
            }
        }
    }

    template <class F>
    Frac map_atoms(F&& fn, int nd0, int nd1) const {
        if (is_zero()) return Frac();
        Frac r;
        r.unit_ = unit_;
        r.d0_ = nd0;
        r.d1_ = nd1;
        for (const auto& [f, e] : fac_) {
            BiPoly g = fn(f);
            if (g.is_zero()) {
                if (e < 0) throw std::domain_error("Frac: denominator vanishes under substitution");
                return Frac();
            }
            r.push_factor(g, e);
        }
        if (r.unit_ == 0) return Frac();
        return r;
    }
};

struct QTTag {
    static const char* name0() { return "q"; }
    static const char* name1() { return "t"; }
};
struct KappaTag {
    static const char* name0() { return "k"; }
    static const char* name1() { return "_"; }
};

/// Exact element of Q(q,t).
using ScalarQT = Frac<QTTag>;
/// Exact element of Q(kappa); the second variable slot is unused.
using ScalarKappa = Frac<KappaTag>;

template <class Tag>
inline bool is_zero(const Frac<Tag>& s) {
    return s.is_zero();
}
inline bool is_zero(const Rat& r) { return r == 0; }

// Convenience constructors for the common monomials.
inline ScalarQT qt_q(int e = 1) { return ScalarQT::var0_pow(e); }
inline ScalarQT qt_t(int e = 1) { return ScalarQT::var1_pow(e); }
inline ScalarQT qt_mono(int eq, int et) { return ScalarQT::monomial(eq, et); }
inline ScalarKappa kappa(int e = 1) { return ScalarKappa::var0_pow(e); }

}  // namespace symqt
