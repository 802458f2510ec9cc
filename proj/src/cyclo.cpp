#include "symqt/cyclo.hpp"

#include <stdexcept>

namespace symqt {

namespace {

// (1 - q^a t^b) as an element of Q(q,t); a or b may be negative.
ScalarQT one_minus_qt(int a, int b) {
    if (a == 0 && b == 0) return ScalarQT::zero();
    return ScalarQT::one() - qt_mono(a, b);
}

}  // namespace

CycloFactored CycloFactored::factor(int a, int b, int e) {
    CycloFactored f;
    if (a == 0 && b == 0) throw std::invalid_argument("CycloFactored: zero factor (1 - q^0 t^0)");
    if (e != 0) f.factors_[{a, b}] = e;
    return f;
}

CycloFactored& CycloFactored::operator*=(const CycloFactored& o) {
    unit_ *= o.unit_;
    if (unit_ == 0) {
        factors_.clear();
        return *this;
    }
    for (const auto& [ab, e] : o.factors_) {
        auto it = factors_.find(ab);
        if (it == factors_.end()) {
            factors_.emplace(ab, e);
        } else {
            it->second += e;
            if (it->second == 0) factors_.erase(it);
        }
    }
    return *this;
}

CycloFactored& CycloFactored::operator/=(const CycloFactored& o) { return *this *= o.inverse(); }

CycloFactored CycloFactored::operator*(const CycloFactored& o) const {
    CycloFactored r = *this;
    r *= o;
    return r;
}

CycloFactored CycloFactored::operator/(const CycloFactored& o) const {
    CycloFactored r = *this;
    r /= o;
    return r;
}

CycloFactored CycloFactored::inverse() const {
    if (unit_ == 0) throw std::domain_error("CycloFactored: inverse of zero");
    CycloFactored r(Rat(1) / unit_);
    for (const auto& [ab, e] : factors_) r.factors_[ab] = -e;
    return r;
}

ScalarQT CycloFactored::expand() const {
    ScalarQT r(unit_);
    for (const auto& [ab, e] : factors_) r *= one_minus_qt(ab.first, ab.second).pow(e);
    return r;
}

ScalarQT CycloFactored::expand_t0() const {
    ScalarQT r(unit_);
    for (const auto& [ab, e] : factors_) {
        if (ab.second > 0) continue;
        if (ab.second < 0) throw std::domain_error("CycloFactored: negative t-exponent at t=0");
        r *= one_minus_qt(ab.first, 0).pow(e);
    }
    return r;
}

ScalarQT CycloFactored::expand_q0() const {
    ScalarQT r(unit_);
    for (const auto& [ab, e] : factors_) {
        if (ab.first > 0) continue;
        if (ab.first < 0) throw std::domain_error("CycloFactored: negative q-exponent at q=0");
        r *= one_minus_qt(0, ab.second).pow(e);
    }
    return r;
}

ScalarKappa CycloFactored::expand_jack() const {
    ScalarKappa r{Rat(unit_)};
    for (const auto& [ab, e] : factors_) {
        ScalarKappa lin = ScalarKappa(Int(ab.first)) + kappa().pow(1) * ScalarKappa(Int(ab.second));
        r *= lin.pow(e);
    }
    return r;
}

}  // namespace symqt
