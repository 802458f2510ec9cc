#pragma once

#include <cstdint>
#include <functional>

#include "symqt/dual.hpp"

namespace symqt {

/// q-difference operator of Cauchy-kernel type acting on polynomials in
/// x_1..x_N, applied to a symmetric polynomial.  The operator is the
/// subset-sum
///   D_N(z) = sum_A C_A z^{|A|} T_{q,A},
///   C_A = t^{|A|(|A|-1)/2} prod_{a in A} (x_a t^{1-N} - 1)/x_a
///         * prod_{b notin A} (x_b + z)/x_b
///         * prod_{a in A, b notin A} (x_a t - x_b)/(x_a - x_b),
/// with T_{q,A} the q-shift x_a -> q x_a on A.  The result is again a
/// polynomial; the (x_a - x_b) and x_a denominators are divided out exactly
/// (an error here means the input was not symmetric).  The returned
/// polynomial has one extra variable slot holding z.
/// `tval` substitutes the coefficient parameter t (pass q for the equal-
/// parameter case; the shifts stay q-shifts).
PolyQT apply_D(const PolyQT& f, int N, const ScalarQT& tval = qt_t());

/// Additive-shift analogue over Q(kappa):
///   D^J_N(z) = sum_A (-1)^{|A|} prod_{a in A}(x_a + (N-1)k)
///              * prod_{b notin A}(x_b + z)
///              * prod_{a,b}(x_a - x_b - k)/(x_a - x_b) * T^{-1}_A,
/// with T^{-1} the shift x_a -> x_a - 1.
PolyKappa apply_D_jack(const PolyKappa& f, int N);

/// Inverse-shift operator on rational functions in u_1..u_N:
///   Dhat_N(z) = sum_A Chat_A z^{|A|} T^{-1}_{q,A},
///   Chat_A = t^{-|A|(|A|-1)/2} prod_{a in A}(u_a - 1)/u_a
///            * prod_{b notin A}(u_b + z)/u_b
///            * prod_{a,b}(u_a/t - u_b)/(u_a - u_b),
/// with T^{-1}_{q,a} the substitution u_a -> u_a / q.  The result carries one
/// extra variable slot for z and keeps an explicitly factored denominator.
RatFnQT apply_Dhat(const RatFnQT& h, int N, const ScalarQT& tval = qt_t());

/// Jack analogue: sum_A (-1)^{|A|} prod_{a in A} u_a * prod_{b notin A}(u_b+z)
/// * prod (u_a - u_b + k)/(u_a - u_b) with shifts u_a -> u_a + 1.
RatFnKappa apply_Dhat_jack(const RatFnKappa& h, int N);

/// Eigenvalue prod_i (1 + q^{mu_i} t^{1-i} z) as a polynomial in the last
/// variable slot of an (nvars+1)-variable polynomial.
PolyQT eigenvalue_poly(const Partition& mu, int N, const ScalarQT& tval = qt_t());
/// Jack eigenvalue prod_i (mu_i + (1-i)k + z).
PolyKappa eigenvalue_poly_jack(const Partition& mu, int N);

/// Seeded random rational points with numerators and denominators up to 1e6.
class RandRat {
public:
    explicit RandRat(uint64_t seed) : state_(seed) {}
    uint64_t next_u64();
    Rat next_rational();
    static RandRat for_point(uint64_t master_seed, int point_index);

private:
    uint64_t state_;
};

/// Exact agreement of two partial evaluation maps at `points` seeded random
/// points; both callbacks may refuse a point (denominator hit), in which case
/// the point is resampled.  More than 100 consecutive refusals is an error.
struct EvalPoint {
    Rat q, t, z;
    std::vector<Rat> x;  // or u
};
bool seeded_agree(const std::function<std::optional<Rat>(const EvalPoint&)>& lhs,
                  const std::function<std::optional<Rat>(const EvalPoint&)>& rhs, int nvars,
                  int points, uint64_t seed);

/// Numeric evaluation helpers used by the seeded checks.
std::optional<Rat> eval_poly_qt(const PolyQT& p, const std::vector<Rat>& x, const Rat& q,
                                const Rat& t);
std::optional<Rat> eval_ratfn_qt(const RatFnQT& h, const std::vector<Rat>& u, const Rat& q,
                                 const Rat& t);

}  // namespace symqt
