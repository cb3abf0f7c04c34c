#pragma once

#include "liouville/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lv {

// Exponents for the three-factor Young inequality used in the cutoff argument.
struct YoungExponents {
    Rational p1, q1, sigma1;
    Rational A, B;
    Rational G;     // 1/p1 + 1/q1
    long delta = 0; // cutoff power, ceil(2 sigma1) + 1
};

struct YoungResult {
    bool feasible = false;
    std::string reason;   // violated constraint when infeasible
    std::optional<YoungExponents> exps;
};

// Closed form of 1/p1 + 1/q1 in terms of (alpha, gamma, p).
Rational young_G(const Rational& alpha, const Rational& gamma, const Rational& p);

YoungResult young_exponents(int n, const Rational& alpha, const Rational& gamma, const Rational& p);

struct YoungScanRow {
    int n = 0;
    std::string frame;   // "gamma-zero" or "gamma-shift"
    Rational p, alpha, gamma;
    YoungResult result;
    bool invariants = false;   // exponent identity, positivity, n - 2 sigma1 < 0, delta > 2 sigma1
};

struct YoungScan {
    std::vector<YoungScanRow> rows;
    long infeasible = 0;
    bool pass = false;
};

// p = 1 + (crit - 1) k / p_points for k = 1..p_points. The gamma = 0 frame uses
// alpha = -2(p - P)/(n + 2); the gamma = n - 4 frame (n >= 7) uses alpha = -gamma - 4/n.
YoungScan young_scan(int n_lo, int n_hi, int p_points, const Rational& P = Rational(1, 10000));

} // namespace lv
