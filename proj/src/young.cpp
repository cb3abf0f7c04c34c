#include "liouville/young.hpp"

#include "liouville/coefficients.hpp"

namespace lv {

Rational young_G(const Rational& alpha, const Rational& gamma, const Rational& p) {
    Rational den = (gamma + Rational(4)) * p + Rational(2) * alpha + gamma;
    if (den.is_zero()) return Rational(0);
    return ((gamma + Rational(2)) * p + Rational(2) * alpha + gamma + Rational(2)) / den;
}

YoungResult young_exponents(int n, const Rational& alpha, const Rational& gamma, const Rational& p) {
    YoungResult r;
    auto fail = [&](const std::string& why) {
        r.feasible = false;
        r.reason = why;
        return r;
    };
    if (n < 3) return fail("n >= 3");
    if (gamma.sign() < 0) return fail("gamma >= 0");
    if (gamma.is_zero()) {
        if ((alpha + Rational(2) * p).sign() <= 0) return fail("alpha + 2p > 0");
    } else if ((alpha + gamma + Rational(2)).sign() <= 0) {
        return fail("alpha + gamma + 2 > 0");
    }
    Rational den = Rational(2) * alpha + (gamma + Rational(4)) * p + gamma;
    if (den.is_zero()) return fail("denominator (gamma+4)p + 2 alpha + gamma nonzero");

    YoungExponents e;
    // u = 1/p1 = A/(alpha + 2p) = B/gamma
    Rational u = (alpha + gamma + Rational(2)) / den;
    if (u.sign() <= 0) return fail("p1 > 0");
    e.p1 = u.inverse();
    e.A = (alpha + Rational(2) * p) * u;
    e.B = gamma * u;
    Rational qden = gamma + Rational(2) - e.B;
    if (qden.sign() <= 0) return fail("q1 > 0 (gamma + 2 - B > 0)");
    e.q1 = (gamma + Rational(4)) / qden;
    e.G = u + e.q1.inverse();
    Rational lower = Rational(1) - Rational(2, n);
    if (e.G >= Rational(1)) return fail("1/p1 + 1/q1 < 1 (G = " + e.G.decimal(8) + ")");
    if (e.G <= lower) return fail("1/p1 + 1/q1 > 1 - 2/n (G = " + e.G.decimal(8) + ")");
    e.sigma1 = (Rational(1) - e.G).inverse();
    e.delta = (Rational(2) * e.sigma1).ceil().get_si() + 1;
    r.feasible = true;
    r.exps = e;
    return r;
}

YoungScan young_scan(int n_lo, int n_hi, int p_points, const Rational& P) {
    if (n_lo < 3 || n_hi < n_lo || p_points < 1) throw DomainError("young scan: need 3 <= n_lo <= n_hi, p_points >= 1");
    YoungScan scan;
    auto add = [&](int n, const char* frame, const Rational& p, const Rational& alpha, const Rational& gamma) {
        YoungScanRow row{n, frame, p, alpha, gamma, young_exponents(n, alpha, gamma, p), false};
        if (row.result.feasible) {
            const auto& e = *row.result.exps;
            bool positive = e.p1.sign() > 0 && e.q1.sign() > 0 && e.sigma1.sign() > 0;
            row.invariants = positive && e.p1.inverse() + e.q1.inverse() + e.sigma1.inverse() == Rational(1) &&
                             Rational(n) - Rational(2) * e.sigma1 < Rational(0) &&
                             Rational(e.delta) > Rational(2) * e.sigma1;
        }
        if (!row.result.feasible || !row.invariants) ++scan.infeasible;
        scan.rows.push_back(std::move(row));
    };
    for (int n = n_lo; n <= n_hi; ++n) {
        Rational crit = critical_p(n);
        for (int k = 1; k <= p_points; ++k) {
            Rational p = Rational(1) + (crit - Rational(1)) * Rational(k, p_points);
            add(n, "gamma-zero", p, Rational(-2) * (p - P) / Rational(n + 2), Rational(0));
            if (n >= 7) {
                Rational gamma(n - 4);
                add(n, "gamma-shift", p, -gamma - Rational(4, n), gamma);
            }
        }
    }
    scan.pass = scan.infeasible == 0;
    return scan;
}

} // namespace lv
