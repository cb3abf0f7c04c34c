#include "doctest.h"

#include "liouville/claims.hpp"
#include "liouville/coefficients.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>

using namespace lv;
using Big = boost::multiprecision::cpp_bin_float_50;

namespace {

Big to_big(const Rational& r) { return Big(r.num().get_str()) / Big(r.den().get_str()); }

const ClaimCheck* find(const ClaimReport& r, const std::string& prefix) {
    for (const auto& c : r.checks)
        if (c.name.rfind(prefix, 0) == 0) return &c;
    return nullptr;
}

} // namespace

TEST_CASE("claim polynomials at their anchor points") {
    // h1(9) = -1.7*729 + 19.6*81 - 51.6*9 + 30.4
    double h1 = -1.7 * 729 + 19.6 * 81 - 51.6 * 9 + 30.4;
    CHECK(h1 == doctest::Approx(-85.7));
    double quartic = 2.5 * 2401 - 4.2 * 343 + 29 * 49 - 34 * 7 + 4;
    CHECK(quartic == doctest::Approx(5748.9));
    auto r1 = verify_claim(1, 12);
    auto* c = find(r1, "-h1(n)");
    REQUIRE(c != nullptr);
    CHECK(c->pass);
}

TEST_CASE("sqrt enclosure by squaring") {
    for (const char* s : {"1/5", "1/30", "0.000001"}) {
        auto r = sqrt_enclosure_check(Rational::parse(s));
        CHECK(r.lower);
        CHECK(r.upper);
        Big x = to_big(Rational::parse(s));
        CHECK(1 - x / 2 - x * x / 6 < boost::multiprecision::sqrt(1 - x));
        CHECK(boost::multiprecision::sqrt(1 - x) < 1 - x / 2 - x * x / 8);
    }
}

TEST_CASE("D1 D2 identity") {
    CHECK(d1d2_identity(7));
    CHECK(d1d2_identity(10));
    CHECK(d1d2_identity_symbolic());
    // Independent float evaluation at n = 7.
    double sd = std::sqrt(5.0 * 8.0);
    double d1 = (sd - 2) / 3, d2 = (2 * sd + 22) / 36;
    CHECK(d1 * d2 == doctest::Approx((2 + sd) / 6).epsilon(1e-14));
}

TEST_CASE("sqrt(Delta') enclosure and factor identities") {
    for (const auto& c : sqrt_delta_bounds(7)) CHECK_MESSAGE(c.pass, c.name);
    for (const auto& c : k5_factor_identities(7, 12)) CHECK_MESSAGE(c.pass, c.name);
    // Oracle: direct double evaluation of the enclosure at several n.
    for (int n = 7; n < 200; n += 13) {
        double s = std::sqrt((n - 2.0) * (2 * n - 6.0));
        CHECK(std::sqrt(2.0) * (n - 2.5 - 1.0 / (6 * (n - 2))) < s);
        CHECK(s < std::sqrt(2.0) * (n - 2.5 - 1.0 / (8 * (n - 2))));
    }
}

TEST_CASE("claim 6 against the truncated geometric series") {
    // LHS = (1 - 4/n + 4/n^2) sum ((4-q)/n)^k, summed to convergence in 50 digits.
    for (int n : {9, 10, 15, 40}) {
        for (double qd : {1.0, 1.1, 1.0 + 2.0 / n}) {
            Big q = Big(qd), N = Big(n);
            Big r = (Big(4) - q) / N, term = 1, sum = 0;
            for (int k = 0; k < 400; ++k) {
                sum += term;
                term *= r;
            }
            Big lhs = (1 - 4 / N + 4 / (N * N)) * sum;
            Big rhs = 1 - q / N + (Big(1.5) * q * q - 8 * q + 12) / (N * N);
            CHECK(lhs < rhs);
            Big direct = (N - 4 + 4 / N) / (N - 4 + q);
            CHECK(boost::multiprecision::abs(direct - lhs) < Big(1e-40));
        }
    }
    auto r = verify_claim(6, 30);
    CHECK(r.verdict == ClaimVerdict::CertifiedAllN);
    REQUIRE(r.margin);
    CHECK(r.margin->sign() > 0);
}

TEST_CASE("claim 7 records the equality case and certifies the window") {
    auto r = verify_claim(7, 30);
    CHECK(r.verdict == ClaimVerdict::CertifiedAllN);
    auto* eq = find(r, "q(crit) = 1 + 2/n");
    REQUIRE(eq != nullptr);
    CHECK(eq->pass);
    // Oracle: q at the window ends in plain arithmetic.
    for (int n = 7; n <= 30; ++n) {
        Big p = Big(n + 2) / Big(n - 2) - Big(1) / Big(n * n);
        Big q = 2 * p / (p + 1);
        CHECK(q > 1 + Big(1.9) / n);
    }
}

TEST_CASE("every claim verdict on a short range") {
    auto all = verify_all_claims(20);
    REQUIRE(all.size() == 10);
    for (const auto& r : all) {
        INFO("claim " << r.id << " " << claim_verdict_name(r.verdict));
        CHECK(r.failures.empty());
        CHECK(r.inconclusive.empty());
        CHECK(r.verdict == ClaimVerdict::CertifiedAllN);
        for (const auto& c : r.checks) CHECK_MESSAGE(c.pass, "claim " << r.id << ": " << c.name << " " << c.detail);
    }
}

TEST_CASE("claim 8 margin against a floating oracle") {
    // U0 at q = 1 + 2/n from the closed forms, in 50 digits.
    auto r = verify_claim(8, 12);
    for (int n = 7; n <= 12; ++n) {
        Big N = n, sD = boost::multiprecision::sqrt(Big((n - 2) * (2 * n - 6)));
        Big S = 1 / (N - 2 + sD), g = N - 4, q = 1 + 2 / N;
        Big a1 = (2 * sD + N * N - 5 * N + 8) / ((N - 1) * (N - 2));
        Big B0 = a1 * (N / (N - 1) + g);
        Big Lq = 1 + g * S + q * S;
        Big s2 = boost::multiprecision::sqrt(Big(2));
        Big U0 = 2 * B0 * Lq * Lq / ((g + q) * (g + q)) * ((2 - s2) / 2 + s2 / N);
        CHECK(U0 > (4 - 2 * s2) * (1 / N + 7 / (N * N)));
    }
    REQUIRE(r.margin);
    CHECK(r.margin->sign() > 0);
}
