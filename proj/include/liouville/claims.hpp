#pragma once

#include "liouville/interval.hpp"
#include "liouville/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lv {

enum class ClaimVerdict { CertifiedAllN, VerifiedOnRange, Violated, Inconclusive };
const char* claim_verdict_name(ClaimVerdict v);

struct ClaimCheck {
    std::string name;
    std::string method;   // exact-polynomial | quadratic-field-exact | interval-range
    bool pass = false;
    std::string detail;
};

struct ClaimReport {
    int id = 0;
    std::string statement;
    int n_lo = 0, n_hi = 0;          // range covered by the per-n check
    std::string q_range;
    std::string method;              // strongest method that decided the verdict
    ClaimVerdict verdict = ClaimVerdict::Inconclusive;
    std::optional<Rational> margin;  // smallest certified slack over the per-n check
    int margin_n = 0;
    std::vector<int> failures, inconclusive;
    std::optional<int> tail_from;    // exact certificate covers [tail_from, infinity)
    std::vector<ClaimCheck> checks;  // reductions and auxiliary certificates
    double seconds = 0;
};

ClaimReport verify_claim(int id, int n_max = 500, unsigned precision = kDefaultPrecision);
std::vector<ClaimReport> verify_all_claims(int n_max = 500, unsigned precision = kDefaultPrecision);

struct SqrtEnclosureResult {
    bool lower = false, upper = false;
};
// 1 - x/2 - x^2/6 < sqrt(1-x) < 1 - x/2 - x^2/8 for 0 < x <= 1/5, decided by squaring.
SqrtEnclosureResult sqrt_enclosure_check(const Rational& x);

// D1 D2 = (2 + sqrt(Delta'))/(n-1) with Delta' = (n-2)(2n-6).
bool d1d2_identity(int n);
// The same identity with n symbolic.
bool d1d2_identity_symbolic();

// Enclosure sqrt2 (n - 5/2 - 1/(6(n-2))) < sqrt(Delta') < sqrt2 (n - 5/2 - 1/(8(n-2))) on [n_lo, infinity).
std::vector<ClaimCheck> sqrt_delta_bounds(int n_lo);

// Exact rewrites of the three factors in the K5 estimate, checked in Q(sqrt(Delta')) on sampled (n, q).
std::vector<ClaimCheck> k5_factor_identities(int n_lo, int n_hi);

} // namespace lv
