#include "liouville/thresholds.hpp"

namespace lv {

namespace {

RatInterval pos_pow(const RatInterval& base, const Rational& e, unsigned prec, const char* what) {
    if (!base.positive()) throw DomainError(std::string("non-positive base in ") + what);
    return interval_pow(base, e, prec);
}

Rational crit_minus(int n) { return critical_p(n) - Rational(1, n * n); }

// Lq = 1 + gamma S + qS and the common factor 2 B0 Lq^2/(gamma+q)^2 of the K3 roots.
template <class F>
F root_scale(const CoefficientSet<F>& c, const F& gamma, const F& S, const F& q) {
    F Lq = lift(Rational(1), S) + gamma * S + q * S;
    F gq = gamma + q;
    return lift(Rational(2), S) * c.B0 * Lq * Lq / (gq * gq);
}

} // namespace

RatInterval mc_bound(int n, const Rational& p, unsigned prec) {
    if (n < 1 || p <= Rational(1)) throw DomainError("mc_bound: need n >= 1, p > 1");
    Rational r = (p - Rational(1)) / (p + Rational(1));
    Rational inner = Rational(n) * (p + Rational(1)) * (p + Rational(1)) / (Rational(4) * p);
    return (interval_pow(RatInterval(r), r, prec) * interval_pow(RatInterval(inner), p / (p + Rational(1)), prec))
        .round_out(prec);
}

std::optional<RatInterval> m1(int n, const Rational& p, unsigned prec) {
    if (n >= 3 && n <= 6) return std::nullopt;
    ProblemParams prob = ProblemParams::make(n, p);
    const Rational& q = prob.q;
    Rational nn(n);
    Rational b1 = (nn - Rational(1)) * (nn - Rational(1)) * q / (Rational(4) * nn) - Rational(1);
    Rational b2 = nn / q - nn * (nn - Rational(1)) / (nn + Rational(2));
    if (b1.sign() <= 0) throw DomainError("m1: (n-1)^2 q/(4n) - 1 must be positive");
    if (b2.sign() <= 0) throw DomainError("m1: n/q - n(n-1)/(n+2) must be positive");
    return ((p + Rational(1)) / b1 * interval_pow(RatInterval(b2), q / Rational(2), prec)).round_out(prec);
}

RatInterval m1_unsimplified(int n, const Rational& p, unsigned prec) {
    ProblemParams prob = ProblemParams::make(n, p);
    const Rational& q = prob.q;
    Rational nn(n), p1 = p + Rational(1);
    Rational br = (nn - Rational(1)) * (nn - Rational(1)) * q * q / (Rational(4) * nn * nn) - q / nn;
    Rational tail = p - (nn - Rational(1)) * p * q / (nn + Rational(2));
    RatInterval r = interval_pow(RatInterval(q / nn), p1.inverse(), prec) * RatInterval(p1) /
                    interval_pow(RatInterval(p), p / p1, prec) / RatInterval(br) *
                    pos_pow(RatInterval(tail), p / p1, prec, "m1_unsimplified");
    return r.round_out(prec);
}

Rational small_n_U(int n, const Rational& q) {
    if (n <= 4) return Rational(1) + q / Rational(n);
    return Rational(1) + Rational(2) * q / Rational(n);
}

SmallNResult small_n_verify(int n, const Rational& p, const Rational& eps0, std::optional<Rational> U) {
    SmallNResult r;
    ProblemParams prob = ProblemParams::make(n, p);
    r.n = n;
    r.p = p;
    r.q = prob.q;
    r.eps0 = eps0;
    r.U = U ? *U : small_n_U(n, prob.q);
    auto f = frame_gamma_zero(n, p, eps0);
    f.eps = Rational(0);
    auto c = coefficients(prob, f);
    Rational T = Rational(9) * eps0 / (f.alpha + p);
    auto K = k_set(c, Multipliers<Rational>{eps0, T, r.U, Rational(0)}, prob, f);
    r.K3 = K.K3;
    r.K5 = K.K5;
    r.K3_margin = K.K3 - eps0;
    r.K5_margin = RatInterval(K.K5) - interval_sqrt(RatInterval(eps0));
    r.K3_ok = r.K3_margin.sign() >= 0;
    // K5 >= sqrt(eps0) decided exactly by squaring
    r.K5_ok = K.K5.sign() >= 0 && K.K5 * K.K5 >= eps0;
    r.pass = r.K3_ok && r.K5_ok;
    Rational nn(n), qS = prob.q / nn;
    r.K5_leading = (Rational(2) - (nn - Rational(1)) * prob.q) * p / (nn + Rational(2)) * r.U / (Rational(1) + qS) +
                   nn / (nn + Rational(2)) * p;
    r.leading_sign_mismatch = r.K5_leading.sign() != K.K5.sign();
    return r;
}

QuadExt discriminant_delta(int n, const Rational& p) {
    ProblemParams prob = ProblemParams::make(n, p);
    auto f = frame_gamma_shift(n);
    auto c = coefficients(prob, f);
    QuadExt q(prob.q), g(f.gamma);
    QuadExt Lq = QuadExt(1) + g * f.S + q * f.S;
    return QuadExt(1) - q * (g + q) / (c.a1 * (QuadExt(Rational(n, n - 1)) + g) * Lq * Lq);
}

U0Result u0(int n, const Rational& p, unsigned prec) {
    ProblemParams prob = ProblemParams::make(n, p);
    auto f = frame_gamma_shift(n);
    auto c = coefficients(prob, f);
    QuadExt delta = discriminant_delta(n, p);
    if (delta.sign() <= 0) throw DomainError("u0: discriminant not positive");
    QuadExt scale = root_scale(c, QuadExt(f.gamma), f.S, QuadExt(prob.q));
    RatInterval sc = scale.enclose(prec), sd = interval_sqrt(delta.enclose(prec), prec);
    RatInterval factor = RatInterval(1) - RatInterval(Rational(1) - Rational(2, n)) / sqrt2_enclosure(prec);
    U0Result r;
    r.U0 = (sc * factor).round_out(prec);
    r.U1 = (sc * (RatInterval(1) - sd)).round_out(prec);
    r.U2 = (sc * (RatInterval(1) + sd)).round_out(prec);
    auto fi = to_interval(f, prec);
    auto ci = coefficients(prob, fi);
    auto K3 = [&](const RatInterval& U) {
        return k_set(ci, Multipliers<RatInterval>{RatInterval(0), RatInterval(0), U, Rational(0)}, prob, fi)
            .K3.round_out(prec);
    };
    r.K3_U0 = K3(r.U0);
    r.K3_U1 = K3(r.U1);
    r.K3_U2 = K3(r.U2);
    r.inside = r.K3_U0.positive() && (r.U0 - r.U1).positive() && (r.U2 - r.U0).positive();
    return r;
}

M2Result m2(int n, const Rational& p, const ThresholdOptions& opt) {
    M2Result res;
    ProblemParams prob = ProblemParams::make(n, p);
    if (p < crit_minus(n)) {
        res.zero_branch = true;
        res.value = RatInterval(0);
        return res;
    }
    unsigned prec = opt.precision;
    const Rational& q = prob.q;
    auto f = frame_gamma_shift(n);
    auto fi = to_interval(f, prec);
    auto ci = coefficients(prob, fi);
    RatInterval U0 = u0(n, p, prec).U0;
    res.U0 = U0;
    RatInterval c2U0 = ci.c2 + U0;
    Rational two_minus_q = Rational(2) - q;
    for (const auto& eps : opt.eps_grid) {
        M2Point pt;
        pt.eps = eps;
        Rational P = p - crit_minus(n) + eps;
        pt.P = RatInterval(P);
        pt.K = k_set(ci, Multipliers<RatInterval>{RatInterval(P), RatInterval(0), U0, Rational(0)}, prob, fi);
        pt.K5 = pt.K.K5.round_out(prec);
        if (!pt.K5.positive()) throw DomainError("m2: K5 not certified positive");
        pt.J = ((Rational(1) - opt.j_slack) * pt.K5 / RatInterval(P)).round_out(prec);
        RatInterval v = interval_pow(RatInterval(P), q / Rational(2), prec) *
                        interval_pow(RatInterval(q / Rational(2)), q / Rational(2), prec) *
                        pos_pow(pt.J * RatInterval(Rational(2) / two_minus_q), -two_minus_q / Rational(2), prec, "m2 J") *
                        pos_pow(c2U0, -q / Rational(2), prec, "m2 c2 + U0");
        pt.value = v.round_out(prec);
        res.points.push_back(pt);
    }
    for (const auto& pt : res.points)
        if (!res.best || pt.value.hi() < res.best->value.hi()) res.best = pt;
    res.value = res.best->value;
    return res;
}

K1Result k1_positive_shift(int n) {
    Rational pp = crit_minus(n);
    ProblemParams prob = ProblemParams::make(n, pp);
    auto f = frame_gamma_shift(n);
    auto c = coefficients(prob, f);
    auto K = k_set(c, Multipliers<QuadExt>{QuadExt(0), QuadExt(0), QuadExt(0), Rational(0)}, prob, f);
    K1Result r;
    r.H = QuadExt(4) * c.B0 * c.L * c.L * K.K1;
    Rational nn(n);
    Rational n2 = nn * nn, n4 = n2 * n2;
    QuadExt rt = QuadExt::sqrt(Rational((n - 2) * (2 * n - 6)));
    QuadExt num = QuadExt(Rational(-88) * n4 + Rational(327) * n2 * nn - Rational(251) * n2 + Rational(24) * nn +
                          Rational(4)) +
                  rt * QuadExt(Rational(8) * nn * (Rational(8) * n2 - Rational(9) * nn + Rational(2)));
    r.H_closed = num / QuadExt((nn - Rational(1)) * n4);
    r.match = r.H == r.H_closed;
    r.positive = r.H.sign() > 0;
    return r;
}

namespace {

ChainCheck less(const std::string& name, const RatInterval& a, const RatInterval& b) {
    ChainCheck c;
    c.name = name;
    c.lhs = a;
    c.rhs = b;
    c.pass = a.hi() < b.lo();
    return c;
}

} // namespace

std::vector<ChainCheck> m2_chain_checks(int n, const ThresholdOptions& opt) {
    std::vector<ChainCheck> out;
    unsigned prec = opt.precision;
    Rational p = critical_p(n);
    Rational nn(n);
    auto M2 = m2(n, p, opt);
    auto M1 = m1(n, p, prec);
    Rational br = (nn - Rational(1)) * (nn - Rational(1)) * (nn + Rational(2)) / (Rational(4) * nn * nn) - Rational(1);
    out.push_back(less("M1 > 1.7/[(n-1)^2(n+2)/(4n^2) - 1]", RatInterval(R("1.7") / br), *M1));
    if (n == 7) {
        out.push_back(less("M2 < 0.8", M2.value, RatInterval(R("0.8"))));
        out.push_back(less("M1 > 2.6", RatInterval(R("2.6")), *M1));
        // Explicit upper bound for M2 at n = 7.
        RatInterval s2 = sqrt2_enclosure(prec);
        RatInterval inner = RatInterval(-(Rational(1) + Rational(2, n)) / Rational(n - 3)) +
                            (RatInterval(4) - RatInterval(2) * s2) / RatInterval(n) +
                            (RatInterval(28) - RatInterval(14) * s2) / RatInterval(n * n);
        RatInterval bound = interval_pow(RatInterval(nn), Rational(-1) - R("1.9") / nn, prec) *
                            interval_pow(RatInterval(R("1.456") * nn - R("8.334")), -Rational(n - 2, 2 * n), prec) *
                            s2 / RatInterval(2) * pos_pow(inner, -Rational(n + 2, 2 * n), prec, "n=7 bound");
        out.push_back(less("M2 < explicit n=7 bound", M2.value, bound.round_out(prec)));
        out.push_back(less("explicit n=7 bound < 0.8", bound.round_out(prec), RatInterval(R("0.8"))));
    } else if (n >= 8) {
        Rational inner = R("0.24") - R("1.43") / nn;
        RatInterval bound = interval_pow(RatInterval(inner), Rational(-1, 2), prec) / RatInterval(nn);
        out.push_back(less("M2 < n^-1 (0.24 - 1.43/n)^(-1/2)", M2.value, bound.round_out(prec)));
        out.push_back(less("n^-1 (0.24 - 1.43/n)^(-1/2) < 1.7/[...]", bound.round_out(prec),
                           RatInterval(R("1.7") / br)));
    }
    out.push_back(less("M2 < M1", M2.value, *M1));
    return out;
}

PolyCertificate closing_polynomial_certificate() {
    return poly_positive_on(UniPoly::from_decimals({"0.6", "4", "3", "-2"}), Rational(8), std::nullopt);
}

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Certified: return "certified";
    case Verdict::Violated: return "violated";
    default: return "inconclusive";
    }
}

M2M1Row m2_lt_m1_row(int n, const Rational& p, const ThresholdOptions& opt) {
    M2M1Row row;
    row.n = n;
    row.p = p;
    ThresholdOptions o = opt;
    for (unsigned prec = opt.precision; prec <= kMaxPrecision; prec *= 2) {
        o.precision = prec;
        row.precision = prec;
        row.m2 = m2(n, p, o).value;
        auto m = m1(n, p, prec);
        if (!m) {
            row.verdict = Verdict::Certified;
            return row;
        }
        row.m1 = *m;
        if (row.m2.hi() < row.m1.lo()) {
            row.verdict = Verdict::Certified;
            return row;
        }
        if (row.m2.lo() >= row.m1.hi()) {
            row.verdict = Verdict::Violated;
            return row;
        }
    }
    row.verdict = Verdict::Inconclusive;
    return row;
}

std::vector<M2M1Row> m2_lt_m1_grid(int n_lo, int n_hi, int p_points, const ThresholdOptions& opt) {
    std::vector<M2M1Row> rows;
    for (int n = n_lo; n <= n_hi; ++n) {
        Rational lo = crit_minus(n), width(1, n * n);
        for (int k = 0; k < p_points; ++k) {
            Rational p = p_points == 1 ? critical_p(n) : lo + width * Rational(k, p_points - 1);
            rows.push_back(m2_lt_m1_row(n, p, opt));
        }
    }
    return rows;
}

QWindow q_window(int n, const Rational& p) {
    Rational q = critical_q(p), nn(n);
    QWindow w;
    w.lower_strict = Rational(1) + R("1.9") / nn < q;
    w.upper = q <= Rational(1) + Rational(2) / nn;
    w.upper_strict = q < Rational(1) + Rational(2) / nn;
    return w;
}

ThresholdReport threshold_report(int n, const Rational& p, const ThresholdOptions& opt) {
    ThresholdReport r;
    ProblemParams prob = ProblemParams::make(n, p);
    r.n = n;
    r.p = p;
    r.q = prob.q;
    r.precision = opt.precision;
    r.MC = mc_bound(n, p, opt.precision);
    r.M1 = m1(n, p, opt.precision);
    if (n >= 7) {
        r.Delta = discriminant_delta(n, p);
        r.U0 = u0(n, p, opt.precision);
        r.M2 = m2(n, p, opt);
        r.m2_lt_m1 = m2_lt_m1_row(n, p, opt).verdict;
        if (p == critical_p(n)) r.chain = m2_chain_checks(n, opt);
    } else {
        M2Result z;
        z.zero_branch = true;
        z.value = RatInterval(0);
        r.M2 = z;
        r.m2_lt_m1 = Verdict::Certified;
        r.small_n.push_back(small_n_verify(n, p, Rational(1, 10000)));
        if (!r.small_n.back().pass) r.m2_lt_m1 = Verdict::Inconclusive;
    }
    return r;
}

} // namespace lv
