#pragma once

#include "liouville/coefficients.hpp"
#include "liouville/interval.hpp"
#include "liouville/poly.hpp"
#include "liouville/quadext.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lv {

struct ThresholdOptions {
    unsigned precision = kDefaultPrecision;
    // Offsets added to P on the M2 branch; the reported M2 is the smallest over this grid.
    std::vector<Rational> eps_grid = {Rational(1, 1000), Rational(1, 10000), Rational(1, 1000000)};
    // PJ = (1 - j_slack) K5.
    Rational j_slack = Rational(1, 1000000);
};

// ((p-1)/(p+1))^((p-1)/(p+1)) (n(p+1)^2/(4p))^(p/(p+1))
RatInterval mc_bound(int n, const Rational& p, unsigned precision = kDefaultPrecision);

// Large-M threshold. nullopt means +infinity (3 <= n <= 6). Throws DomainError when a bracket is not positive.
std::optional<RatInterval> m1(int n, const Rational& p, unsigned precision = kDefaultPrecision);

// The first form of the large-M bound before simplification, for cross-checking m1.
RatInterval m1_unsimplified(int n, const Rational& p, unsigned precision = kDefaultPrecision);

// Multiplier U prescribed for small dimensions: 1 + q/n for n <= 4, 1 + 2q/n for n = 5, 6.
Rational small_n_U(int n, const Rational& q);

struct SmallNResult {
    int n = 0;
    Rational p, q, U, eps0;
    Rational K3, K5;
    Rational K3_margin;       // K3 - eps0
    RatInterval K5_margin;    // K5 - sqrt(eps0)
    bool K3_ok = false, K5_ok = false;
    bool pass = false;
    Rational K5_leading;      // leading-order expression without the O(eps0) remainder
    bool leading_sign_mismatch = false;
};

// gamma = 0, S = Q = 1/n, P = eps0, T = 9 eps0/(alpha+p), alpha = -2(p-P)/(n+2).
SmallNResult small_n_verify(int n, const Rational& p, const Rational& eps0, std::optional<Rational> U = std::nullopt);

// Discriminant of K3(U) = 0 in the gamma = n-4 frame, exact in Q(sqrt((n-2)(2n-6))).
QuadExt discriminant_delta(int n, const Rational& p);

struct U0Result {
    RatInterval U0, U1, U2;
    RatInterval K3_U0, K3_U1, K3_U2;
    bool inside = false;   // U1 < U0 < U2 and K3(U0) > 0, certified
};
U0Result u0(int n, const Rational& p, unsigned precision = kDefaultPrecision);

struct M2Point {
    Rational eps;
    RatInterval P, K5, J, value;
    KSet<RatInterval> K;
};

struct M2Result {
    bool zero_branch = false;    // p below crit - 1/n^2, M2 = 0
    RatInterval value;           // smallest enclosure over the eps grid
    std::optional<M2Point> best;
    std::vector<M2Point> points;
    RatInterval U0;
};
M2Result m2(int n, const Rational& p, const ThresholdOptions& opt = {});

struct K1Result {
    QuadExt H;          // 4 B0 L^2 K1 from the coefficient engine
    QuadExt H_closed;   // closed-form expansion divided by (n-1) n^4
    bool match = false;
    bool positive = false;
};
// K1 > 0 in the gamma = n-4 frame with p - P = (n+2)/(n-2) - 1/n^2, T = U = 0.
K1Result k1_positive_shift(int n);

struct ChainCheck {
    std::string name;
    bool pass = false;
    RatInterval lhs, rhs;   // pass iff lhs < rhs certified
};

// Comparison chain for the closing argument at one n >= 7 with critical p.
std::vector<ChainCheck> m2_chain_checks(int n, const ThresholdOptions& opt = {});

// 0.6n^3 + 4n^2 + 3n - 2 > 0 on [8, inf)
PolyCertificate closing_polynomial_certificate();

enum class Verdict { Certified, Violated, Inconclusive };
const char* verdict_name(Verdict v);

struct M2M1Row {
    int n = 0;
    Rational p;
    RatInterval m2, m1;
    Verdict verdict = Verdict::Inconclusive;
    unsigned precision = 0;
};
std::vector<M2M1Row> m2_lt_m1_grid(int n_lo, int n_hi, int p_points, const ThresholdOptions& opt = {});
M2M1Row m2_lt_m1_row(int n, const Rational& p, const ThresholdOptions& opt = {});

// 1 + 1.9/n < q <= 1 + 2/n; the upper bound is attained at critical p.
struct QWindow {
    bool lower_strict = false, upper = false, upper_strict = false;
};
QWindow q_window(int n, const Rational& p);

struct ThresholdReport {
    int n = 0;
    Rational p, q;
    RatInterval MC;
    std::optional<RatInterval> M1;
    std::optional<QuadExt> Delta;
    std::optional<U0Result> U0;
    std::optional<M2Result> M2;
    Verdict m2_lt_m1 = Verdict::Inconclusive;
    std::vector<ChainCheck> chain;
    std::vector<SmallNResult> small_n;   // filled for n <= 6
    unsigned precision = 0;
};
ThresholdReport threshold_report(int n, const Rational& p, const ThresholdOptions& opt = {});

} // namespace lv
