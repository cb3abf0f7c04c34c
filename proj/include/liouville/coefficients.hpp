#pragma once

#include "liouville/interval.hpp"
#include "liouville/quadext.hpp"
#include "liouville/rational.hpp"
#include "liouville/symbolic.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace lv {

// Raised when a formula hits a zero denominator or an unmet precondition.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Lifting rational constants into each number type; `like` carries context
// (the radicand for SqrtExpr).
inline Rational lift(const Rational& r, const Rational&) { return r; }
inline QuadExt lift(const Rational& r, const QuadExt&) { return QuadExt(r); }
inline RatInterval lift(const Rational& r, const RatInterval&) { return RatInterval(r); }
inline double lift(const Rational& r, double) { return r.to_double(); }
inline long double lift(const Rational& r, long double) { return r.to_long_double(); }
inline SqrtExpr lift(const Rational& r, const SqrtExpr& like) {
    return SqrtExpr(RatFn(r, like.radicand().var()), like.radicand());
}

// Any other ordered field type constructible from decimal strings (extended floats).
template <class F>
F lift(const Rational& r, const F&) {
    return F(r.num().get_str()) / F(r.den().get_str());
}

// +1 / -1 / 0 when certain, 2 when undecided (intervals straddling zero).
inline int certain_sign(const Rational& x) { return x.sign(); }
inline int certain_sign(const QuadExt& x) { return x.sign(); }
inline int certain_sign(const RatInterval& x) { return x.certain_sign(); }
inline int certain_sign(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
inline int certain_sign(long double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
template <class F>
int certain_sign(const F& x) {
    return x > 0 ? 1 : (x < 0 ? -1 : 0);
}
// Symbolic values carry no range, so only identical zero is decided.
inline int certain_sign(const SqrtExpr& x) { return x.is_zero() ? 0 : 2; }

Rational critical_q(const Rational& p);
Rational critical_p(int n);   // (n+2)/(n-2)

struct ProblemParams {
    int n = 3;
    Rational p, q, M, N{1};

    // q from the critical relation q = 2p/(p+1).
    static ProblemParams make(int n, const Rational& p, const Rational& M = Rational(1));
    void validate() const;
};

template <class F>
struct FrameParams {
    Rational gamma;
    F S, Q;
    Rational alpha;
    Rational eps;
};

template <class F>
struct Multipliers {
    F P, T, U;
    Rational eps1;
};

template <class F>
struct CoefficientSet {
    F a1, a2, a3, b1, b2, c2, b3, b4, b5;
    F tau, D, L, B0, Lambda;
};

template <class F>
struct KSet {
    F K1, K2, K3, K4, K5, K6;
    const F& operator[](int i) const {
        switch (i) {
        case 1: return K1;
        case 2: return K2;
        case 3: return K3;
        case 4: return K4;
        case 5: return K5;
        default: return K6;
        }
    }
};

namespace detail {
template <class F>
F nonzero(const F& x, const char* what) {
    if (certain_sign(x) == 0) throw DomainError(std::string("zero denominator: ") + what);
    return x;
}
} // namespace detail

// Coefficients a1..b5 with every input already in F (n and p may be symbolic).
template <class F>
CoefficientSet<F> coefficients_generic(const F& n, const F& p, const F& q, const F& gamma, const F& S, const F& Q,
                                       const F& alpha, const F& eps) {
    auto k = [&](long v) { return lift(Rational(v), S); };
    CoefficientSet<F> c;
    c.D = k(1) - S * S + gamma * S - gamma * S * S - (n - k(1)) * Q * Q;
    c.L = k(1) + gamma * S + k(2) * S;
    c.tau = S * S + (n - k(1)) * Q * Q - k(1) / n;
    F D = detail::nonzero(c.D, "1 - S^2 + gamma S - gamma S^2 - (n-1) Q^2");
    F L = detail::nonzero(c.L, "1 + gamma S + 2S");
    F gq = detail::nonzero(gamma + q, "gamma + q");
    c.Lambda = (k(1) + gamma * S - eps * c.tau) / D;
    const F& Lm = c.Lambda;
    c.a1 = Lm - eps;
    c.a2 = Lm * (k(1) + gamma) - eps;
    c.a3 = -(alpha + p) * (alpha - k(1)) / L + Lm * alpha * (alpha - k(1)) * (k(1) - S) / L;
    c.b1 = Lm * alpha * (gamma + k(3)) / L - (alpha + p) * (gamma + k(2)) / L;
    c.b2 = gamma + Lm * (k(2) * gamma * S - gamma + k(2) * S - k(2) * Q) - k(2) * eps * (S - Q);
    c.c2 = -q / gq;
    c.b3 = k(0);
    c.b4 = -p - q * alpha / gq;
    c.b5 = -q / gq;
    c.B0 = c.a2 + c.a1 / (n - k(1));
    return c;
}

template <class F>
KSet<F> k_set_generic(const CoefficientSet<F>& c, const F& P, const F& T, const F& U, const F& p, const F& q,
                      const F& gamma, const F& S, const F& alpha) {
    auto k = [&](long v) { return lift(Rational(v), S); };
    if constexpr (std::is_same_v<F, SqrtExpr>) {
        if (c.B0.is_zero()) throw DomainError("B0 must be positive");
    } else if (certain_sign(c.B0) != 1) {
        throw DomainError("B0 must be positive");
    }
    F Lg = detail::nonzero(k(1) + gamma * S, "1 + gamma S");
    F Lq = detail::nonzero(k(1) + gamma * S + q * S, "1 + gamma S + qS");
    F beta1 = c.b1 + P * (gamma + k(2)) / c.L;
    F x = T * gamma / Lg;
    F y = U * (gamma + q) / Lq;
    F four_b0 = k(4) * c.B0;
    KSet<F> K;
    K.K1 = c.a3 + P * (alpha - k(1)) / c.L - beta1 * beta1 / four_b0;
    K.K2 = T - x * x / four_b0;
    K.K3 = c.c2 + U - y * y / four_b0;
    K.K4 = -(c.b3 + P + T * (alpha + p) / Lg) + k(2) * x * beta1 / four_b0;
    K.K5 = -(c.b4 + P + U * alpha / Lq) + k(2) * beta1 * y / four_b0;
    K.K6 = c.c2 + T + U - k(2) * x * y / four_b0;
    return K;
}

template <class F>
CoefficientSet<F> coefficients(const ProblemParams& prob, const FrameParams<F>& fr) {
    const F& S = fr.S;
    return coefficients_generic<F>(lift(Rational(prob.n), S), lift(prob.p, S), lift(prob.q, S), lift(fr.gamma, S), S,
                                   fr.Q, lift(fr.alpha, S), lift(fr.eps, S));
}

template <class F>
KSet<F> k_set(const CoefficientSet<F>& c, const Multipliers<F>& m, const ProblemParams& prob, const FrameParams<F>& fr) {
    const F& S = fr.S;
    return k_set_generic<F>(c, m.P, m.T, m.U, lift(prob.p, S), lift(prob.q, S), lift(fr.gamma, S), S,
                            lift(fr.alpha, S));
}

// S for the frame: 1/n when gamma = 0, the exact positive root of the eps = 0
// quadratic otherwise. For eps > 0 and gamma > 0 see solve_S_bracket.
QuadExt solve_S_exact(int n, const Rational& gamma);

struct SBracket {
    Rational lo, hi, mid;
    Rational b2_at_mid;   // |b2(mid)| < 1e-12
};

// Root of b2(S) = 0 (with Q = (1-S)/(n-1)) by sign-change bisection seeded at the eps = 0 root.
// Throws DomainError("no-root-near-seed") when no sign change is found.
SBracket solve_S_bracket(int n, const Rational& gamma, const Rational& eps);

// b2 as a function of S alone, exact.
Rational b2_of_S(int n, const Rational& gamma, const Rational& eps, const Rational& S);

// Standard frames.
FrameParams<Rational> frame_gamma_zero(int n, const Rational& p, const Rational& P, const Rational& eps = Rational(0));
FrameParams<QuadExt> frame_gamma_shift(int n);
// Frame used by the identity lab: gamma = n-4 when admissible, else gamma = 3.
FrameParams<QuadExt> frame_shift_or_three(int n);

template <class F>
FrameParams<RatInterval> to_interval(const FrameParams<F>& f, unsigned precision = kDefaultPrecision);

struct GateResult {
    std::string name;
    bool pass = false;
    bool decided = true;
    std::string detail;
};

template <class F>
std::vector<GateResult> gate_check(const ProblemParams& prob, const FrameParams<F>& fr, const CoefficientSet<F>& c);

// Independent evaluation of I(U, p - P) from its expanded closed form
// (valid for eps = 0 frames, where a1 equals the shared factor Lambda).
template <class F>
F i_function(const CoefficientSet<F>& c, const F& U, const F& p_minus_P, const F& q, const F& gamma, const F& S,
             const F& alpha) {
    auto k = [&](long v) { return lift(Rational(v), S); };
    F Lq = k(1) + gamma * S + q * S;
    F two_b0 = k(2) * c.B0;
    return (U * (gamma + k(2)) * (gamma + q) / (two_b0 * c.L * Lq) - k(1)) * p_minus_P - q * alpha / (gamma + q) +
           U * alpha / Lq -
           (c.a1 * alpha * (gamma + k(3)) / c.L - alpha * (gamma + k(2)) / c.L) * U * (gamma + q) / (two_b0 * Lq);
}

} // namespace lv
