#include "symqt/diffop.hpp"

#include <stdexcept>

namespace symqt {

namespace {

std::vector<std::vector<int>> subsets(int N) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << N); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < N; ++i)
            if (mask & (1 << i)) s.push_back(i);
        out.push_back(std::move(s));
    }
    return out;
}

// V(x) / prod_{a in A, b notin A} (x_a - x_b) as a signed polynomial:
// the unsplit pairs of the Vandermonde survive, split pairs contribute the
// sign needed to orient (x_a - x_b) with a in A.
template <class S>
MultiPoly<S> unsplit_vandermonde(int N, int nv, const std::vector<bool>& in_a, int& sign) {
    MultiPoly<S> r = MultiPoly<S>::constant(nv, S(1));
    sign = 1;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            if (in_a[i] == in_a[j]) {
                r *= MultiPoly<S>::variable(nv, i) - MultiPoly<S>::variable(nv, j);
            } else if (in_a[j]) {
                // factor consumed as (x_j - x_i) = -(x_i - x_j)
                sign = -sign;
            }
        }
    return r;
}

}  // namespace

PolyQT apply_D(const PolyQT& f, int N, const ScalarQT& tval) {
    if (f.nvars() != N) throw std::invalid_argument("apply_D: variable count mismatch");
    const int nv = N + 1;  // x_0..x_{N-1}, z
    PolyQT acc(nv);
    const PolyQT fz = f.extended(1);
    for (const auto& A : subsets(N)) {
        std::vector<bool> in_a(N, false);
        for (int a : A) in_a[a] = true;
        int sign = 0;
        PolyQT term = unsplit_vandermonde<ScalarQT>(N, nv, in_a, sign);
        const int k = static_cast<int>(A.size());
        ScalarQT coef = tval.pow(k * (k - 1) / 2);
        if (sign < 0) coef = -coef;
        term = term.scaled(coef);
        for (int a = 0; a < N; ++a) {
            PolyQT lin(nv);
            if (in_a[a]) {
                lin = PolyQT::variable(nv, a).scaled(tval.pow(1 - N));
                lin.add_term(std::vector<int>(nv, 0), -ScalarQT::one());
            } else {
                lin = PolyQT::variable(nv, a) + PolyQT::variable(nv, N);
            }
            term *= lin;
        }
        for (int a : A)
            for (int b = 0; b < N; ++b)
                if (!in_a[b]) {
                    term *= PolyQT::variable(nv, a).scaled(tval) - PolyQT::variable(nv, b);
                }
        // z^{|A|} and the q-shift on A
        std::vector<int> ze(nv, 0);
        ze[N] = k;
        term *= PolyQT::monomial(nv, ze, ScalarQT::one());
        acc += term * fz.vars_scaled(A, qt_q());
    }
    // divide by V(x) and prod x_j
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) acc = acc.divide_linear(i, PolyQT::variable(nv, j));
    std::vector<int> mono(nv, 0);
    for (int j = 0; j < N; ++j) mono[j] = 1;
    return acc.divide_monomial(mono);
}

PolyKappa apply_D_jack(const PolyKappa& f, int N) {
    if (f.nvars() != N) throw std::invalid_argument("apply_D_jack: variable count mismatch");
    const int nv = N + 1;
    PolyKappa acc(nv);
    const PolyKappa fz = f.extended(1);
    PolyKappa shift_down(nv);  // x -> x - 1 template per variable handled below
    for (const auto& A : subsets(N)) {
        std::vector<bool> in_a(N, false);
        for (int a : A) in_a[a] = true;
        int sign = 0;
        PolyKappa term = unsplit_vandermonde<ScalarKappa>(N, nv, in_a, sign);
        if ((A.size() % 2) == 1) sign = -sign;  // (-1)^{|A|}
        if (sign < 0) term = term.scaled(ScalarKappa(-1));
        for (int a = 0; a < N; ++a) {
            PolyKappa lin = PolyKappa::variable(nv, a);
            if (in_a[a]) {
                lin.add_term(std::vector<int>(nv, 0), kappa() * ScalarKappa(Int(N - 1)));
            } else {
                lin += PolyKappa::variable(nv, N);  // + z
            }
            term *= lin;
        }
        for (int a : A)
            for (int b = 0; b < N; ++b)
                if (!in_a[b]) {
                    PolyKappa lin = PolyKappa::variable(nv, a) - PolyKappa::variable(nv, b);
                    lin.add_term(std::vector<int>(nv, 0), -kappa());
                    term *= lin;
                }
        PolyKappa shifted = fz;
        for (int a : A) shifted = shifted.subs_var_affine(a, ScalarKappa(-1));
        acc += term * shifted;
    }
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) acc = acc.divide_linear(i, PolyKappa::variable(nv, j));
    return acc;
}

namespace {

// u_a -> u_a / q on a factored rational function: numerator coefficients pick
// up q^{-deg}, a factor (u_a - c) becomes (u_a - qc)/q.
RatFnQT qshift_inverse(const RatFnQT& h, const std::vector<int>& vars) {
    std::vector<bool> shift(h.nvars(), false);
    for (int v : vars) shift[v] = true;
    PolyQT num = h.num().vars_scaled(vars, qt_q(-1));
    RatFnQT::FactorMap den;
    ScalarQT scale = ScalarQT::one();
    for (const auto& [f, m] : h.den()) {
        if (f.other >= 0) throw std::invalid_argument("qshift_inverse: pair factor");
        if (shift[f.var]) {
            den[{f.var, -1, f.c * qt_q()}] += m;
            scale *= qt_q(m);
        } else {
            den[{f.var, f.other, f.c}] += m;
        }
    }
    return RatFnQT(num.scaled(scale), std::move(den));
}

RatFnKappa shift_up(const RatFnKappa& h, const std::vector<int>& vars) {
    std::vector<bool> shift(h.nvars(), false);
    for (int v : vars) shift[v] = true;
    PolyKappa num = h.num();
    for (int v : vars) num = num.subs_var_affine(v, ScalarKappa(1));
    RatFnKappa::FactorMap den;
    for (const auto& [f, m] : h.den()) {
        if (f.other >= 0) throw std::invalid_argument("shift_up: pair factor");
        if (shift[f.var])
            den[{f.var, -1, f.c - ScalarKappa(1)}] += m;  // (u+1-c) = (u - (c-1))
        else
            den[{f.var, f.other, f.c}] += m;
    }
    return RatFnKappa(std::move(num), std::move(den));
}

}  // namespace

RatFnQT apply_Dhat(const RatFnQT& h, int N, const ScalarQT& tval) {
    if (h.nvars() != N) throw std::invalid_argument("apply_Dhat: variable count mismatch");
    const int nv = N + 1;  // u_0..u_{N-1}, z
    // extend h by the z slot
    PolyQT hnum = h.num().extended(1);
    RatFnQT::FactorMap hden;
    for (const auto& [f, m] : h.den()) hden[{f.var, f.other, f.c}] += m;
    RatFnQT hz(std::move(hnum), std::move(hden));

    RatFnQT acc{PolyQT(nv)};
    for (const auto& A : subsets(N)) {
        std::vector<bool> in_a(N, false);
        for (int a : A) in_a[a] = true;
        const int k = static_cast<int>(A.size());
        // coefficient as a rational function in (u, z)
        PolyQT cnum = PolyQT::constant(nv, tval.pow(-k * (k - 1) / 2));
        RatFnQT::FactorMap cden;
        for (int a = 0; a < N; ++a) {
            PolyQT lin(nv);
            if (in_a[a]) {
                lin = PolyQT::variable(nv, a);
                lin.add_term(std::vector<int>(nv, 0), -ScalarQT::one());
            } else {
                lin = PolyQT::variable(nv, a) + PolyQT::variable(nv, N);
            }
            cnum *= lin;
            cden[{a, -1, ScalarQT::zero()}] += 1;  // 1/u_a
        }
        for (int a : A)
            for (int b = 0; b < N; ++b)
                if (!in_a[b]) {
                    cnum *= PolyQT::variable(nv, a).scaled(tval.pow(-1)) - PolyQT::variable(nv, b);
                    if (a < b)
                        cden[{a, b, ScalarQT::zero()}] += 1;
                    else {
                        cden[{b, a, ScalarQT::zero()}] += 1;
                        cnum = cnum.scaled(-ScalarQT::one());
                    }
                }
        std::vector<int> ze(nv, 0);
        ze[N] = k;
        cnum *= PolyQT::monomial(nv, ze, ScalarQT::one());
        acc += RatFnQT(std::move(cnum), std::move(cden)) * qshift_inverse(hz, A);
    }
    return acc;
}

RatFnKappa apply_Dhat_jack(const RatFnKappa& h, int N) {
    if (h.nvars() != N) throw std::invalid_argument("apply_Dhat_jack: variable count mismatch");
    const int nv = N + 1;
    PolyKappa hnum = h.num().extended(1);
    RatFnKappa::FactorMap hden;
    for (const auto& [f, m] : h.den()) hden[{f.var, f.other, f.c}] += m;
    RatFnKappa hz(std::move(hnum), std::move(hden));

    RatFnKappa acc{PolyKappa(nv)};
    for (const auto& A : subsets(N)) {
        std::vector<bool> in_a(N, false);
        for (int a : A) in_a[a] = true;
        PolyKappa cnum = PolyKappa::constant(nv, ScalarKappa((A.size() % 2) ? -1 : 1));
        RatFnKappa::FactorMap cden;
        for (int a = 0; a < N; ++a) {
            if (in_a[a]) {
                cnum *= PolyKappa::variable(nv, a);
            } else {
                cnum *= PolyKappa::variable(nv, a) + PolyKappa::variable(nv, N);
            }
        }
        for (int a : A)
            for (int b = 0; b < N; ++b)
                if (!in_a[b]) {
                    PolyKappa lin = PolyKappa::variable(nv, a) - PolyKappa::variable(nv, b);
                    lin.add_term(std::vector<int>(nv, 0), kappa());
                    cnum *= lin;
                    if (a < b)
                        cden[{a, b, ScalarKappa::zero()}] += 1;
                    else {
                        cden[{b, a, ScalarKappa::zero()}] += 1;
                        cnum = cnum.scaled(ScalarKappa(-1));
                    }
                }
        acc += RatFnKappa(std::move(cnum), std::move(cden)) * shift_up(hz, A);
    }
    return acc;
}

PolyQT eigenvalue_poly(const Partition& mu, int N, const ScalarQT& tval) {
    const int nv = N + 1;
    PolyQT r = PolyQT::constant(nv, ScalarQT::one());
    for (int i = 1; i <= N; ++i) {
        PolyQT lin = PolyQT::constant(nv, ScalarQT::one());
        std::vector<int> ze(nv, 0);
        ze[N] = 1;
        lin.add_term(ze, qt_q(mu.part(i)) * tval.pow(1 - i));
        r *= lin;
    }
    return r;
}

PolyKappa eigenvalue_poly_jack(const Partition& mu, int N) {
    const int nv = N + 1;
    PolyKappa r = PolyKappa::constant(nv, ScalarKappa(1));
    for (int i = 1; i <= N; ++i) {
        PolyKappa lin(nv);
        std::vector<int> ze(nv, 0);
        ze[N] = 1;
        lin.add_term(ze, ScalarKappa(1));
        lin.add_term(std::vector<int>(nv, 0),
                     ScalarKappa(Int(mu.part(i))) + kappa() * ScalarKappa(Int(1 - i)));
        r *= lin;
    }
    return r;
}

uint64_t RandRat::next_u64() {
    // splitmix64
    state_ += 0x9E3779B97F4A7C15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

Rat RandRat::next_rational() {
    const int64_t M = 1000000;
    int64_t num = static_cast<int64_t>(next_u64() % (2 * M + 1)) - M;
    int64_t den = static_cast<int64_t>(next_u64() % M) + 1;
    return Rat(num, den);
}

RandRat RandRat::for_point(uint64_t master_seed, int point_index) {
    RandRat mix(master_seed ^ (0xA0761D6478BD642Full * static_cast<uint64_t>(point_index + 1)));
    mix.next_u64();
    return mix;
}

bool seeded_agree(const std::function<std::optional<Rat>(const EvalPoint&)>& lhs,
                  const std::function<std::optional<Rat>(const EvalPoint&)>& rhs, int nvars,
                  int points, uint64_t seed) {
    for (int p = 0; p < points; ++p) {
        RandRat rng = RandRat::for_point(seed, p);
        int misses = 0;
        while (true) {
            EvalPoint pt;
            pt.q = rng.next_rational();
            pt.t = rng.next_rational();
            pt.z = rng.next_rational();
            pt.x.resize(nvars);
            for (auto& v : pt.x) v = rng.next_rational();
            auto l = lhs(pt);
            auto r = l ? rhs(pt) : std::optional<Rat>();
            if (l && r) {
                if (*l != *r) return false;
                break;
            }
            if (++misses > 100) throw std::runtime_error("seeded_agree: too many denominator hits");
        }
    }
    return true;
}

std::optional<Rat> eval_poly_qt(const PolyQT& p, const std::vector<Rat>& x, const Rat& q,
                                const Rat& t) {
    Rat r(0);
    for (const auto& [e, c] : p.terms()) {
        auto cv = c.eval(q, t);
        if (!cv) return std::nullopt;
        Rat m = *cv;
        for (size_t i = 0; i < x.size(); ++i) m *= rat_pow(x[i], e[i]);
        r += m;
    }
    return r;
}

std::optional<Rat> eval_ratfn_qt(const RatFnQT& h, const std::vector<Rat>& u, const Rat& q,
                                 const Rat& t) {
    Rat d(1);
    for (const auto& [f, m] : h.den()) {
        auto cv = f.c.eval(q, t);
        if (!cv) return std::nullopt;
        Rat v = u.at(f.var) - (f.other >= 0 ? u.at(f.other) : *cv);
        if (v == 0) return std::nullopt;
        d *= rat_pow(v, m);
    }
    auto n = eval_poly_qt(h.num(), u, q, t);
    if (!n) return std::nullopt;
    return *n / d;
}

}  // namespace symqt
