#pragma once

#include <map>
#include <utility>

#include "symqt/scalar.hpp"

namespace symqt {

/// Scalar kept in factored form: unit * prod (1 - q^a t^b)^e.  Branching
/// coefficients are built here and expanded lazily; keeping the factors
/// explicit makes the specializations t=0, q=0 and the substitution
/// (1 - q^a t^b) -> (a + b*kappa) structural rewrites.
class CycloFactored {
public:
    using FactorMap = std::map<std::pair<int, int>, int>;  // (a,b) -> exponent

    CycloFactored() : unit_(1) {}
    explicit CycloFactored(Rat unit) : unit_(std::move(unit)) {}

    static CycloFactored one() { return CycloFactored(); }
    /// (1 - q^a t^b)^e
    static CycloFactored factor(int a, int b, int e = 1);

    const Rat& unit() const { return unit_; }
    const FactorMap& factors() const { return factors_; }
    bool is_zero() const { return unit_ == 0; }

    CycloFactored& operator*=(const CycloFactored& o);
    CycloFactored& operator/=(const CycloFactored& o);
    CycloFactored operator*(const CycloFactored& o) const;
    CycloFactored operator/(const CycloFactored& o) const;
    CycloFactored inverse() const;

    /// Lossless expansion into Q(q,t).
    ScalarQT expand() const;
    /// Expansion after setting t = 0 factor-wise.
    ScalarQT expand_t0() const;
    /// Expansion after setting q = 0 factor-wise.
    ScalarQT expand_q0() const;
    /// Structural rewrite (1 - q^a t^b) -> (a + b*kappa) over Q(kappa).
    ScalarKappa expand_jack() const;

private:
    Rat unit_;
    FactorMap factors_;
};

}  // namespace symqt
