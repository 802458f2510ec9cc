#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "symqt/bigint.hpp"

namespace symqt {

/// Sparse polynomial in two commuting variables with Int coefficients.
/// Exponents are nonnegative; negative powers live in the denominator of a
/// fraction, never here.  Used both for Z[q,t] and (with the second slot
/// unused) for Z[kappa].
class BiPoly {
public:
    using Key = std::array<int, 2>;
    using Terms = std::map<Key, Int>;

    BiPoly() = default;
    explicit BiPoly(const Int& c) {
        if (c != 0) terms_[{0, 0}] = c;
    }
    explicit BiPoly(long c) : BiPoly(Int(c)) {}

    static BiPoly monomial(int e0, int e1, Int c = Int(1));
    static BiPoly one() { return BiPoly(Int(1)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }

    size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    int degree(int var) const;        // -1 for the zero polynomial
    int total_degree() const;         // -1 for the zero polynomial
    Key min_exponents() const;        // {0,0} for the zero polynomial

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator-() const;
    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }
    bool operator<(const BiPoly& o) const { return terms_ < o.terms_; }

    /// Shift every exponent by (d0,d1); the result must stay nonnegative.
    BiPoly times_monomial(int d0, int d1) const;
    BiPoly scaled(const Int& c) const;

    /// Sign of the coefficient of the largest monomial (0 for zero poly).
    int leading_sign() const;
    /// gcd of all coefficients, with the sign of the leading one.
    Int content() const;

    static BiPoly gcd(const BiPoly& a, const BiPoly& b);
    /// Exact quotient a/b, or nullopt when b does not divide a.
    static std::optional<BiPoly> try_divide(const BiPoly& a, const BiPoly& b);

    std::optional<Rat> eval(const Rat& v0, const Rat& v1) const;

    BiPoly subs_var1_to_var0() const;  // p(q,t) -> p(q,q)
    BiPoly subs_var0_zero() const;     // p(0,t)
    BiPoly subs_var1_zero() const;     // p(q,0)
    /// p(x,y) -> x^a0 y^a1 p(1/x,1/y); requires a0 >= deg0, a1 >= deg1.
    BiPoly reversed(int a0, int a1) const;

    std::string str(const char* v0 = "q", const char* v1 = "t") const;

private:
    Terms terms_;
    void insert_term(const Key& k, const Int& c);
};

}  // namespace symqt
