#include "doctest.h"

#include "liouville/thresholds.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

using namespace lv;
using big = boost::multiprecision::cpp_bin_float_50;

namespace {

big to_big(const Rational& r) {
    std::string s = r.str();
    auto k = s.find('/');
    return k == std::string::npos ? big(s) : big(s.substr(0, k)) / big(s.substr(k + 1));
}

bool encloses(const RatInterval& x, const big& v, double slack = 0) {
    return to_big(x.lo()) - slack <= v && v <= to_big(x.hi()) + slack;
}

big m1_oracle(int n, const big& p) {
    big q = 2 * p / (p + 1);
    return (p + 1) / ((n - 1) * (n - 1) * q / (4 * n) - 1) * pow(n / q - big(n * (n - 1)) / (n + 2), q / 2);
}

} // namespace

TEST_CASE("MC bound") {
    auto b = mc_bound(7, Rational(9, 5));
    big p = big(9) / 5, r = (p - 1) / (p + 1);
    big oracle = pow(r, r) * pow(7 * (p + 1) * (p + 1) / (4 * p), p / (p + 1));
    CHECK(encloses(b, oracle));
    CHECK(abs(oracle - big("2.580")) < big("0.001"));
    auto b1 = mc_bound(1, Rational(3));
    CHECK(std::abs(b1.mid().to_double() - 0.877383) < 1e-5);
    CHECK(b.width() < Rational::pow10(-6));
}

TEST_CASE("m1 at n=7") {
    auto m = m1(7, Rational(9, 5));
    REQUIRE(m);
    big oracle = m1_oracle(7, big(9) / 5);
    CHECK(encloses(*m, oracle));
    CHECK(abs(oracle - big("3.648")) < big("0.0005"));
    CHECK(m->width() < Rational::pow10(-6));
    CHECK(m->lo() > R("2.6"));
    auto comp = interval_pow(RatInterval(Rational(7, 9)), Rational(9, 14));
    CHECK(std::abs(comp.mid().to_double() - 0.850817) < 1e-6);
    CHECK(!m1(5, Rational(2)));
    for (int n = 3; n <= 6; ++n) CHECK(!m1(n, critical_p(n)));
}

TEST_CASE("m1 brackets stay positive and match the unsimplified form") {
    for (int n = 7; n <= 30; n += 3) {
        Rational crit = critical_p(n);
        for (int k = 1; k <= 20; ++k) {
            Rational p = Rational(1) + (crit - Rational(1)) * Rational(k, 20);
            auto m = m1(n, p);
            REQUIRE(m);
            auto u = m1_unsimplified(n, p);
            CHECK((m->mid() - u.mid()).abs() < Rational::pow10(-25));
            CHECK(encloses(*m, m1_oracle(n, to_big(p)), 1e-40));
        }
    }
}

TEST_CASE("small dimensions") {
    Rational e0(1, 10000);
    auto r3 = small_n_verify(3, Rational(5), e0);
    CHECK(r3.U == Rational(1) + r3.q / Rational(3));
    CHECK(r3.pass);
    auto r6 = small_n_verify(6, Rational(2), e0);
    CHECK(r6.U == Rational(1) + Rational(2) * r6.q / Rational(6));
    CHECK(r6.pass);
    for (int n = 3; n <= 6; ++n) {
        Rational crit = critical_p(n);
        for (int k = 1; k <= 20; ++k) {
            auto r = small_n_verify(n, Rational(1) + (crit - Rational(1)) * Rational(k, 20), e0);
            CHECK_MESSAGE(r.pass, "n=" << n << " k=" << k);
            CHECK(r.K5_margin.positive() == r.K5_ok);
        }
    }
    Rational crit7 = critical_p(7);
    for (int k = 1; k <= 20; ++k) {
        Rational p = Rational(1) + (crit7 - Rational(1)) * Rational(k, 20);
        auto r = small_n_verify(7, p, e0, Rational(1) + critical_q(p) / Rational(7));
        CHECK_FALSE(r.pass);
    }
}

TEST_CASE("large-M branch with gamma = 0") {
    for (int n = 7; n <= 12; ++n) {
        Rational p = critical_p(n), e0(1, 10000);
        auto prob = ProblemParams::make(n, p);
        auto f = frame_gamma_zero(n, p, e0);
        f.eps = Rational(0);
        auto c = coefficients(prob, f);
        Rational T = Rational(10) * e0 / (f.alpha + p), U = Rational(1) + prob.q / Rational(n);
        auto K = k_set(c, Multipliers<Rational>{e0, T, U, Rational(0)}, prob, f);
        CHECK(K.K6 == prob.q / Rational(n) + T);
        CHECK(K.K6 > Rational(0));
        // Young pair (2/q, 2/(2-q)) is conjugate
        CHECK(prob.q / Rational(2) + (Rational(2) - prob.q) / Rational(2) == Rational(1));
    }
}

TEST_CASE("discriminant bounds") {
    CHECK(discriminant_delta(7, Rational(9, 5)) > QuadExt(R("0.284")));
    CHECK(discriminant_delta(8, critical_p(8)) > QuadExt(R("0.322")));
    CHECK(discriminant_delta(9, critical_p(9)) > QuadExt(R("0.5") - Rational(2, 9) + Rational(2, 81)));
    CHECK(discriminant_delta(7, Rational(9, 5)).enclose().width() < Rational::pow10(-6));
}

TEST_CASE("U0 lies between the roots of K3") {
    auto r = u0(7, Rational(9, 5));
    CHECK(r.inside);
    RatInterval s2 = sqrt2_enclosure();
    RatInterval bound = (RatInterval(4) - RatInterval(2) * s2) * RatInterval(Rational(1, 7) + Rational(7, 49));
    CHECK(r.U0.lo() > bound.hi());
    CHECK(r.K3_U1.abs().hi() < Rational::pow10(-10));
    CHECK(r.K3_U2.abs().hi() < Rational::pow10(-10));
    for (int n = 7; n <= 40; ++n) CHECK(u0(n, critical_p(n)).inside);
}

TEST_CASE("M2 values") {
    auto r = m2(7, Rational(9, 5));
    CHECK_FALSE(r.zero_branch);
    CHECK(r.value.hi() < R("0.8"));
    CHECK(r.value.width() < Rational::pow10(-6));
    CHECK(r.points.size() == 3);
    for (const auto& pt : r.points) CHECK((pt.K5 - pt.P * pt.J).positive());
    auto z = m2(7, Rational(17, 10));
    CHECK(z.zero_branch);
    CHECK(z.value.hi().is_zero());
    auto r8 = m2(8, critical_p(8));
    RatInterval b8 = interval_pow(RatInterval(R("0.24") - R("1.43") / Rational(8)), Rational(-1, 2)) / RatInterval(8);
    CHECK(std::abs(b8.mid().to_double() - 0.505) < 0.003);
    CHECK(r8.value.hi() < b8.lo());
}

TEST_CASE("chain checks and the closing polynomial") {
    for (int n : {7, 8, 9, 15, 40}) {
        for (const auto& c : m2_chain_checks(n)) CHECK_MESSAGE(c.pass, "n=" << n << " " << c.name);
    }
    CHECK(closing_polynomial_certificate().verdict == PolyVerdict::Positive);
}

TEST_CASE("K1 positivity in the gamma = n-4 frame") {
    for (int n : {7, 8, 9, 10, 20, 50, 100}) {
        auto r = k1_positive_shift(n);
        CHECK(r.match);
        CHECK(r.positive);
    }
}

TEST_CASE("M2 < M1 rows") {
    auto row = m2_lt_m1_row(20, critical_p(20));
    CHECK(row.verdict == Verdict::Certified);
    CHECK(row.m2.hi() < row.m1.lo());
    auto rows = m2_lt_m1_grid(7, 9, 5);
    CHECK(rows.size() == 15);
    for (const auto& r : rows) CHECK(r.verdict == Verdict::Certified);
}

TEST_CASE("q window") {
    for (int n = 7; n <= 60; ++n) {
        Rational lo = critical_p(n) - Rational(1, n * n);
        for (int k = 0; k <= 10; ++k) {
            Rational p = lo + Rational(1, n * n) * Rational(k, 10);
            auto w = q_window(n, p);
            CHECK(w.lower_strict);
            CHECK(w.upper);
            CHECK(w.upper_strict == (k != 10));
        }
    }
}

TEST_CASE("report assembly") {
    auto r = threshold_report(7, Rational(9, 5));
    CHECK(r.M1);
    CHECK(r.M2);
    CHECK(r.m2_lt_m1 == Verdict::Certified);
    CHECK_FALSE(r.chain.empty());
    auto s = threshold_report(4, Rational(2));
    CHECK(!s.M1);
    CHECK(s.small_n.size() == 1);
    CHECK(s.m2_lt_m1 == Verdict::Certified);
}
