#include "symqt/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace symqt {

namespace {

// Dense univariate layer over Int (variable = second slot of BiPoly keys),
// used only by gcd / exact division.  Little-endian coefficient vectors.
using UP = std::vector<Int>;

void up_trim(UP& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int up_deg(const UP& p) { return static_cast<int>(p.size()) - 1; }

bool up_is_zero(const UP& p) { return p.empty(); }

UP up_sub(const UP& a, const UP& b) {
    UP r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        Int v = 0;
        if (i < a.size()) v += a[i];
        if (i < b.size()) v -= b[i];
        r[i] = v;
    }
    up_trim(r);
    return r;
}

UP up_mul(const UP& a, const UP& b) {
    if (a.empty() || b.empty()) return {};
    UP r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    up_trim(r);
    return r;
}

UP up_scale(const UP& a, const Int& c) {
    if (c == 0) return {};
    UP r = a;
    for (auto& v : r) v *= c;
    return r;
}

Int int_pow(Int b, int e) {
    Int r = 1;
    while (e > 0) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

Int up_content(const UP& a) {
    Int g = 0;
    for (const auto& v : a) g = int_gcd(g, v);
    if (!a.empty() && a.back() < 0) g = -g;
    return g;
}

UP up_div_int(const UP& a, const Int& c) {
    UP r = a;
    for (auto& v : r) v /= c;
    return r;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
UP up_prem(UP a, const UP& b) {
    const Int lb = b.back();
    int e = up_deg(a) - up_deg(b) + 1;
    while (!a.empty() && up_deg(a) >= up_deg(b)) {
        const Int la = a.back();
        const int shift = up_deg(a) - up_deg(b);
        a = up_scale(a, lb);
        UP s(shift, Int(0));
        s.insert(s.end(), b.begin(), b.end());
        a = up_sub(a, up_scale(s, la));
        --e;
    }
    if (e > 0) a = up_scale(a, int_pow(lb, e));
    return a;
}

// Subresultant polynomial remainder sequence; keeps coefficient growth
// polynomial where a naive primitive PRS explodes.
UP up_gcd(UP a, UP b) {
    if (up_is_zero(a)) std::swap(a, b);
    if (up_is_zero(b)) {
        if (up_is_zero(a)) return {};
        return up_div_int(a, up_content(a));
    }
    Int ca = up_content(a), cb = up_content(b);
    Int g0 = int_gcd(ca, cb);
    if (g0 < 0) g0 = -g0;
    a = up_div_int(a, ca);
    b = up_div_int(b, cb);
    if (up_deg(a) < up_deg(b)) std::swap(a, b);
    Int g = 1, h = 1;
    while (true) {
        int delta = up_deg(a) - up_deg(b);
        UP r = up_prem(a, b);
        if (up_is_zero(r)) break;
        if (up_deg(r) == 0) {
            b = UP{Int(1)};
            break;
        }
        Int denom = g * int_pow(h, delta);
        for (auto& c : r) {
            if (c % denom != 0) throw std::logic_error("up_gcd: inexact subresultant division");
            c /= denom;
        }
        a = std::move(b);
        b = std::move(r);
        g = a.back();
        if (delta > 0) {
            Int hn = int_pow(g, delta), hd = int_pow(h, delta - 1);
            if (hn % hd != 0) throw std::logic_error("up_gcd: inexact h update");
            h = hn / hd;
        }
    }
    b = up_div_int(b, up_content(b));
    return up_scale(b, g0);
}

std::optional<UP> up_try_divide(const UP& a, const UP& b) {
    if (up_is_zero(b)) return std::nullopt;
    if (up_is_zero(a)) return UP{};
    if (up_deg(a) < up_deg(b)) return std::nullopt;
    UP r = a;
    UP q(up_deg(a) - up_deg(b) + 1, Int(0));
    const Int lb = b.back();
    while (!up_is_zero(r) && up_deg(r) >= up_deg(b)) {
        if (r.back() % lb != 0) return std::nullopt;
        const Int c = r.back() / lb;
        const int shift = up_deg(r) - up_deg(b);
        q[shift] = c;
        UP s(shift, Int(0));
        s.insert(s.end(), b.begin(), b.end());
        r = up_sub(r, up_scale(s, c));
    }
    if (!up_is_zero(r)) return std::nullopt;
    up_trim(q);
    return q;
}

// Dense bivariate layer: vector over the first variable with UP coefficients.
using BP = std::vector<UP>;

void bp_trim(BP& p) {
    while (!p.empty() && up_is_zero(p.back())) p.pop_back();
}

int bp_deg(const BP& p) { return static_cast<int>(p.size()) - 1; }

bool bp_is_zero(const BP& p) { return p.empty(); }

BP bp_sub(const BP& a, const BP& b) {
    BP r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        UP v = i < a.size() ? a[i] : UP{};
        if (i < b.size()) v = up_sub(v, b[i]);
        r[i] = std::move(v);
    }
    bp_trim(r);
    return r;
}

BP bp_scale_up(const BP& a, const UP& c) {
    if (up_is_zero(c)) return {};
    BP r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = up_mul(a[i], c);
    bp_trim(r);
    return r;
}

UP bp_content(const BP& a) {
    UP g;
    for (const auto& c : a) g = up_gcd(g, c);
    return g;
}

std::optional<BP> bp_div_up(const BP& a, const UP& c) {
    BP r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        auto q = up_try_divide(a[i], c);
        if (!q) return std::nullopt;
        r[i] = std::move(*q);
    }
    bp_trim(r);
    return r;
}

UP up_pow(const UP& base, int e) {
    UP r{Int(1)};
    for (int i = 0; i < e; ++i) r = up_mul(r, base);
    return r;
}

BP bp_prem(BP a, const BP& b) {
    const UP lb = b.back();
    int e = bp_deg(a) - bp_deg(b) + 1;
    while (!bp_is_zero(a) && bp_deg(a) >= bp_deg(b)) {
        const UP la = a.back();
        const int shift = bp_deg(a) - bp_deg(b);
        a = bp_scale_up(a, lb);
        BP s(static_cast<size_t>(shift));
        for (const auto& c : b) s.push_back(c);
        a = bp_sub(a, bp_scale_up(s, la));
        --e;
    }
    if (e > 0) a = bp_scale_up(a, up_pow(lb, e));
    return a;
}

UP up_div_exact(const UP& a, const UP& b) {
    auto q = up_try_divide(a, b);
    if (!q) throw std::logic_error("bp_gcd: inexact coefficient division");
    return *q;
}

BP bp_div_up_exact(const BP& a, const UP& c) {
    auto q = bp_div_up(a, c);
    if (!q) throw std::logic_error("bp_gcd: inexact content division");
    return *q;
}

BP bp_gcd(BP a, BP b) {
    if (bp_is_zero(a)) std::swap(a, b);
    if (bp_is_zero(b)) return a;
    UP ca = bp_content(a), cb = bp_content(b);
    UP g0 = up_gcd(ca, cb);
    a = bp_div_up_exact(a, ca);
    b = bp_div_up_exact(b, cb);
    if (bp_deg(a) < bp_deg(b)) std::swap(a, b);
    UP g{Int(1)}, h{Int(1)};
    while (true) {
        int delta = bp_deg(a) - bp_deg(b);
        BP r = bp_prem(a, b);
        if (bp_is_zero(r)) break;
        if (bp_deg(r) == 0) {
            b = BP{UP{Int(1)}};
            break;
        }
        r = bp_div_up_exact(r, up_mul(g, up_pow(h, delta)));
        a = std::move(b);
        b = std::move(r);
        g = a.back();
        if (delta > 0) h = up_div_exact(up_pow(g, delta), up_pow(h, delta - 1));
    }
    b = bp_div_up_exact(b, bp_content(b));
    return bp_scale_up(b, g0);
}

std::optional<BP> bp_try_divide(const BP& a, const BP& b) {
    if (bp_is_zero(b)) return std::nullopt;
    if (bp_is_zero(a)) return BP{};
    if (bp_deg(a) < bp_deg(b)) return std::nullopt;
    BP r = a;
    BP q(static_cast<size_t>(bp_deg(a) - bp_deg(b)) + 1);
    const UP lb = b.back();
    while (!bp_is_zero(r) && bp_deg(r) >= bp_deg(b)) {
        auto c = up_try_divide(r.back(), lb);
        if (!c) return std::nullopt;
        const int shift = bp_deg(r) - bp_deg(b);
        q[static_cast<size_t>(shift)] = *c;
        BP s(static_cast<size_t>(shift));
        for (const auto& cb : b) s.push_back(cb);
        r = bp_sub(r, bp_scale_up(s, *c));
    }
    if (!bp_is_zero(r)) return std::nullopt;
    bp_trim(q);
    return q;
}

BP to_dense(const BiPoly& p) {
    BP r;
    for (const auto& [k, c] : p.terms()) {
        if (static_cast<size_t>(k[0]) >= r.size()) r.resize(k[0] + 1);
        UP& u = r[k[0]];
        if (static_cast<size_t>(k[1]) >= u.size()) u.resize(k[1] + 1, Int(0));
        u[k[1]] = c;
    }
    return r;
}

BiPoly from_dense(const BP& p) {
    BiPoly r;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < p[i].size(); ++j)
            if (p[i][j] != 0) r += BiPoly::monomial(static_cast<int>(i), static_cast<int>(j), p[i][j]);
    return r;
}

}  // namespace

void BiPoly::insert_term(const Key& k, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPoly BiPoly::monomial(int e0, int e1, Int c) {
    BiPoly p;
    if (e0 < 0 || e1 < 0) throw std::invalid_argument("BiPoly: negative exponent");
    if (c != 0) p.terms_[{e0, e1}] = std::move(c);
    return p;
}

bool BiPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} && terms_.begin()->second == 1;
}

int BiPoly::degree(int var) const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k[var]);
    return d;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k[0] + k[1]);
    return d;
}

BiPoly::Key BiPoly::min_exponents() const {
    Key m{0, 0};
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (first) {
            m = k;
            first = false;
        } else {
            m[0] = std::min(m[0], k[0]);
            m[1] = std::min(m[1], k[1]);
        }
    }
    return m;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) insert_term(k, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) insert_term(k, -c);
    return *this;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r = *this;
    r += o;
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    BiPoly r = *this;
    r -= o;
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.insert_term({ka[0] + kb[0], ka[1] + kb[1]}, ca * cb);
    return r;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

BiPoly BiPoly::times_monomial(int d0, int d1) const {
    BiPoly r;
    for (const auto& [k, c] : terms_) {
        Key nk{k[0] + d0, k[1] + d1};
        if (nk[0] < 0 || nk[1] < 0) throw std::invalid_argument("BiPoly: negative exponent after shift");
        r.terms_[nk] = c;
    }
    return r;
}

BiPoly BiPoly::scaled(const Int& c) const {
    BiPoly r;
    if (c == 0) return r;
    for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
    return r;
}

int BiPoly::leading_sign() const {
    if (terms_.empty()) return 0;
    return terms_.rbegin()->second < 0 ? -1 : 1;
}

Int BiPoly::content() const {
    Int g = 0;
    for (const auto& [k, c] : terms_) g = int_gcd(g, c);
    if (leading_sign() < 0) g = -g;
    return g;
}

namespace {

BiPoly primitive_of(const BiPoly& p) {
    Int c = p.content();
    if (c == 0 || c == 1) return p;
    BiPoly r;
    for (const auto& [k, v] : p.terms()) r += BiPoly::monomial(k[0], k[1], v / c);
    return r;
}

}  // namespace

BiPoly BiPoly::gcd(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero()) return b.leading_sign() < 0 ? -b : b;
    if (b.is_zero()) return a.leading_sign() < 0 ? -a : a;
    Int ic = int_gcd(a.content(), b.content());
    if (ic < 0) ic = -ic;
    BiPoly pa = primitive_of(a), pb = primitive_of(b);
    BiPoly r = primitive_of(from_dense(bp_gcd(to_dense(pa), to_dense(pb))));
    r = r.scaled(ic);
    if (r.leading_sign() < 0) r = -r;
    return r;
}

std::optional<BiPoly> BiPoly::try_divide(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return BiPoly();
    if (b.is_monomial()) {
        const auto& [kb, cb] = *b.terms().begin();
        BiPoly r;
        for (const auto& [k, c] : a.terms_) {
            if (k[0] < kb[0] || k[1] < kb[1] || c % cb != 0) return std::nullopt;
            r.terms_[{k[0] - kb[0], k[1] - kb[1]}] = c / cb;
        }
        return r;
    }
    auto q = bp_try_divide(to_dense(a), to_dense(b));
    if (!q) return std::nullopt;
    return from_dense(*q);
}

std::optional<Rat> BiPoly::eval(const Rat& v0, const Rat& v1) const {
    Rat r(0);
    for (const auto& [k, c] : terms_) r += Rat(c) * rat_pow(v0, k[0]) * rat_pow(v1, k[1]);
    return r;
}

BiPoly BiPoly::subs_var1_to_var0() const {
    BiPoly r;
    for (const auto& [k, c] : terms_) r.insert_term({k[0] + k[1], 0}, c);
    return r;
}

BiPoly BiPoly::subs_var0_zero() const {
    BiPoly r;
    for (const auto& [k, c] : terms_)
        if (k[0] == 0) r.terms_[k] = c;
    return r;
}

BiPoly BiPoly::subs_var1_zero() const {
    BiPoly r;
    for (const auto& [k, c] : terms_)
        if (k[1] == 0) r.terms_[k] = c;
    return r;
}

BiPoly BiPoly::reversed(int a0, int a1) const {
    BiPoly r;
    for (const auto& [k, c] : terms_) {
        if (k[0] > a0 || k[1] > a1) throw std::invalid_argument("BiPoly::reversed: bound too small");
        r.terms_[{a0 - k[0], a1 - k[1]}] = c;
    }
    return r;
}

std::string BiPoly::str(const char* v0, const char* v1) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_var = k[0] > 0 || k[1] > 0;
        if (a != 1 || !has_var) os << a;
        bool star = a != 1 || !has_var;
        auto emit = [&](const char* v, int e) {
            if (e == 0) return;
            if (star) os << "*";
            os << v;
            if (e > 1) os << "^" << e;
            star = true;
        };
        emit(v0, k[0]);
        emit(v1, k[1]);
    }
    return os.str();
}

}  // namespace symqt
