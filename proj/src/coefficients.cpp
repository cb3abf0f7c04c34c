#include "liouville/coefficients.hpp"

namespace lv {

Rational critical_q(const Rational& p) {
    if (p <= Rational(1)) throw DomainError("critical_q: p must exceed 1");
    return Rational(2) * p / (p + Rational(1));
}

Rational critical_p(int n) {
    if (n < 3) throw DomainError("critical_p: n must be at least 3");
    return Rational(n + 2, n - 2);
}

ProblemParams ProblemParams::make(int n, const Rational& p, const Rational& M) {
    ProblemParams pr;
    pr.n = n;
    pr.p = p;
    pr.q = critical_q(p);
    pr.M = M;
    pr.N = Rational(1);
    pr.validate();
    return pr;
}

void ProblemParams::validate() const {
    if (n < 3) throw DomainError("n must be at least 3");
    if (p <= Rational(1)) throw DomainError("p must exceed 1");
    if (p > critical_p(n)) throw DomainError("p exceeds (n+2)/(n-2)");
    if (M.sign() < 0) throw DomainError("M must be nonnegative");
}

QuadExt solve_S_exact(int n, const Rational& gamma) {
    if (gamma.is_zero()) return QuadExt(Rational(1, n));
    if (gamma.sign() < 0) throw DomainError("solve_S: gamma must be nonnegative");
    Rational nn(n), n1(n - 1);
    Rational a = gamma * gamma + nn * gamma / n1;
    Rational bh = gamma + nn / n1;
    Rational c = (gamma + Rational(2)) / n1;
    return QuadExt(-bh / a, a.inverse(), bh * bh + a * c);
}

Rational b2_of_S(int n, const Rational& gamma, const Rational& eps, const Rational& S) {
    Rational Q = (Rational(1) - S) / Rational(n - 1);
    return coefficients_generic<Rational>(Rational(n), Rational(2), Rational(4, 3), gamma, S, Q, Rational(0), eps).b2;
}

SBracket solve_S_bracket(int n, const Rational& gamma, const Rational& eps) {
    QuadExt s0 = solve_S_exact(n, gamma);
    if (s0.is_rational()) {
        Rational s = s0.a();
        Rational b = b2_of_S(n, gamma, eps, s);
        if (b.is_zero()) return {s, s, s, b};
    }
    Rational seed = s0.enclose(96).round_out(64).lo();
    const Rational tol = Rational::pow10(-12);
    Rational h = Rational::pow10(-6);
    Rational lo, hi;
    int slo = 0, shi = 0;
    bool found = false;
    for (int i = 0; i < 40; ++i) {
        lo = seed - h;
        hi = seed + h;
        if (lo.sign() <= 0) lo = h / Rational(1000);
        slo = b2_of_S(n, gamma, eps, lo).sign();
        shi = b2_of_S(n, gamma, eps, hi).sign();
        if (slo == 0) return {lo, lo, lo, Rational(0)};
        if (shi == 0) return {hi, hi, hi, Rational(0)};
        if (slo != shi) {
            found = true;
            break;
        }
        h *= Rational(4);
        if (h > Rational(1, 2)) break;
    }
    if (!found) throw DomainError("no-root-near-seed");
    Rational mid, bm;
    for (int i = 0; i < 400; ++i) {
        mid = (lo + hi) / Rational(2);
        bm = b2_of_S(n, gamma, eps, mid);
        if (bm.abs() < tol && hi - lo < Rational::pow10(-14)) break;
        int sm = bm.sign();
        if (sm == 0) return {mid, mid, mid, bm};
        if (sm == slo) lo = mid;
        else hi = mid;
    }
    return {lo, hi, mid, bm};
}

FrameParams<Rational> frame_gamma_zero(int n, const Rational& p, const Rational& P, const Rational& eps) {
    FrameParams<Rational> f;
    f.gamma = Rational(0);
    f.S = Rational(1, n);
    f.Q = Rational(1, n);
    f.alpha = Rational(-2) * (p - P) / Rational(n + 2);
    f.eps = eps;
    return f;
}

static FrameParams<QuadExt> frame_gamma(int n, const Rational& gamma) {
    FrameParams<QuadExt> f;
    f.gamma = gamma;
    f.S = solve_S_exact(n, gamma);
    f.Q = (QuadExt(1) - f.S) / QuadExt(n - 1);
    f.alpha = -gamma - Rational(4, n);
    f.eps = Rational(0);
    return f;
}

FrameParams<QuadExt> frame_gamma_shift(int n) {
    if (n < 7) throw DomainError("gamma = n - 4 frame needs n >= 7");
    return frame_gamma(n, Rational(n - 4));
}

FrameParams<QuadExt> frame_shift_or_three(int n) { return frame_gamma(n, n >= 7 ? Rational(n - 4) : Rational(3)); }

static RatInterval to_iv(const Rational& x, unsigned) { return RatInterval(x); }
static RatInterval to_iv(const QuadExt& x, unsigned prec) { return x.enclose(prec); }

template <class F>
FrameParams<RatInterval> to_interval(const FrameParams<F>& f, unsigned precision) {
    FrameParams<RatInterval> r;
    r.gamma = f.gamma;
    r.S = to_iv(f.S, precision);
    r.Q = to_iv(f.Q, precision);
    r.alpha = f.alpha;
    r.eps = f.eps;
    return r;
}

template FrameParams<RatInterval> to_interval(const FrameParams<Rational>&, unsigned);
template FrameParams<RatInterval> to_interval(const FrameParams<QuadExt>&, unsigned);

namespace {

bool small_abs(const Rational& x, const Rational& tol) { return x.abs() < tol; }
bool small_abs(const QuadExt& x, const Rational& tol) { return x.enclose().abs().hi() < tol; }
bool small_abs(const RatInterval& x, const Rational& tol) { return x.abs().hi() < tol; }

std::string show(const Rational& x) { return x.decimal(12); }
std::string show(const QuadExt& x) { return x.str(); }
std::string show(const RatInterval& x) {
    auto d = x.decimal(12);
    return "[" + d.first + ", " + d.second + "]";
}

template <class F>
GateResult sign_gate(const std::string& name, const F& x, int want) {
    GateResult g;
    g.name = name;
    int s = certain_sign(x);
    g.decided = s != 2;
    g.pass = s == want;
    g.detail = show(x);
    return g;
}

} // namespace

template <class F>
std::vector<GateResult> gate_check(const ProblemParams& prob, const FrameParams<F>& fr, const CoefficientSet<F>& c) {
    std::vector<GateResult> out;
    const F& S = fr.S;
    GateResult g;
    g.name = "gamma_admissible";
    g.pass = fr.gamma.is_zero() || fr.gamma >= Rational(3);
    g.detail = fr.gamma.str();
    out.push_back(g);

    F cons = lift(Rational(prob.n - 1), S) * fr.Q + S - lift(Rational(1), S);
    GateResult gc = sign_gate("frame_constraint", cons, 0);
    if (!gc.pass && small_abs(cons, Rational::pow10(-30))) gc.pass = gc.decided = true;
    out.push_back(gc);

    GateResult gb = sign_gate("b2_zero", c.b2, 0);
    if (!gb.pass && fr.eps.sign() > 0 && small_abs(c.b2, Rational::pow10(-12))) {
        gb.pass = gb.decided = true;
        gb.detail += " (bracketed S, within 1e-12)";
    }
    out.push_back(gb);

    F lg = lift(Rational(1), S) + lift(fr.gamma, S) * S;
    out.push_back(sign_gate("lambda_positive", lg / c.D, 1));
    out.push_back(sign_gate("B0_positive", c.B0, 1));
    out.push_back(sign_gate("alpha_gamma_2_positive", lift(fr.alpha + fr.gamma + Rational(2), S), 1));
    return out;
}

template std::vector<GateResult> gate_check(const ProblemParams&, const FrameParams<Rational>&,
                                            const CoefficientSet<Rational>&);
template std::vector<GateResult> gate_check(const ProblemParams&, const FrameParams<QuadExt>&,
                                            const CoefficientSet<QuadExt>&);
template std::vector<GateResult> gate_check(const ProblemParams&, const FrameParams<RatInterval>&,
                                            const CoefficientSet<RatInterval>&);

} // namespace lv
