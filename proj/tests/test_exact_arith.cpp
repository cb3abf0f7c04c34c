#include "doctest.h"

#include "liouville/interval.hpp"
#include "liouville/poly.hpp"
#include "liouville/quadext.hpp"
#include "liouville/symbolic.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <random>

using namespace lv;
using Big = boost::multiprecision::cpp_bin_float_50;

static Big big(const Rational& r) { return Big(r.num().get_str()) / Big(r.den().get_str()); }

TEST_CASE("rational parsing is exact") {
    CHECK(R("1.7") == Rational(17, 10));
    CHECK(R("-0.25") == Rational(-1, 4));
    CHECK(R("1e-6") == Rational(1, 1000000));
    CHECK(R("9/5") == Rational(9, 5));
    CHECK(R("2.5e3") == Rational(2500));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("abc"));
}

TEST_CASE("directed decimal rendering") {
    Rational third(1, 3);
    CHECK(third.decimal(5, Round::Down) == "0.33333");
    CHECK(third.decimal(5, Round::Up) == "0.33334");
    CHECK(Rational(-1, 3).decimal(3, Round::Down) == "-0.334");
    CHECK(Rational(999, 1).decimal(2, Round::Up) == "1e3");
    CHECK(Rational(12345, 100).decimal(20) == "123.45");
}

TEST_CASE("quad_sign examples") {
    CHECK(quad_sign(Rational(-6), Rational(1), Rational(40)) == 1);
    CHECK(quad_sign(Rational(0), Rational(0), Rational(40)) == 0);
    CHECK(quad_sign(Rational(22), Rational(2), Rational(40)) == 1);
    CHECK(quad_sign(Rational(-7), Rational(1), Rational(49)) == 0);
    CHECK(quad_sign(Rational(7), Rational(-1), Rational(50)) == -1);
}

TEST_CASE("quadext normalizes radicands") {
    QuadExt x(Rational(-6), Rational(1), Rational(40));
    CHECK(x.d() == Rational(10));
    CHECK(x.b() == Rational(2));
    QuadExt y(Rational(1), Rational(3), Rational(9, 4));
    CHECK(y.is_rational());
    CHECK(y.a() == Rational(11, 2));
    QuadExt z(Rational(0), Rational(1), Rational(5, 3));   // sqrt(15)/3
    CHECK(z.d() == Rational(15));
    CHECK(z.b() == Rational(1, 3));
    CHECK_THROWS(QuadExt::sqrt(Rational(2)) + QuadExt::sqrt(Rational(3)));
}

TEST_CASE("quadext field axioms on random elements") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-50, 50), den(1, 20);
    auto rnd = [&]() { return QuadExt(Rational(d(rng), den(rng)), Rational(d(rng), den(rng)), Rational(40)); };
    for (int i = 0; i < 200; ++i) {
        QuadExt x = rnd(), y = rnd(), z = rnd();
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        if (x.sign() != 0) CHECK(x * x.inverse() == QuadExt(1));
    }
}

TEST_CASE("quad_sign agrees with high-precision evaluation") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(-1000, 1000), den(1, 97), rad(2, 200);
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        Rational a(d(rng), den(rng)), b(d(rng), den(rng)), r(rad(rng));
        int s = quad_sign(a, b, r);
        Big v = big(a) + big(b) * boost::multiprecision::sqrt(big(r));
        if (boost::multiprecision::abs(v) < Big("1e-40")) continue;
        CHECK(s == (v > 0 ? 1 : -1));
        ++checked;
    }
    CHECK(checked > 900);
}

TEST_CASE("interval enclosure of random points") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-100, 100), den(1, 30);
    for (int i = 0; i < 300; ++i) {
        Rational a(d(rng), den(rng)), b(d(rng), den(rng)), c(d(rng), den(rng)), e(d(rng), den(rng));
        RatInterval X(min(a, b), max(a, b)), Y(min(c, e), max(c, e));
        Rational x = X.lo() + (X.hi() - X.lo()) * Rational(1, 3);
        Rational y = Y.lo() + (Y.hi() - Y.lo()) * Rational(2, 7);
        CHECK((X + Y).contains(x + y));
        CHECK((X - Y).contains(x - y));
        CHECK((X * Y).contains(x * y));
        if (!Y.contains_zero()) CHECK((X / Y).contains(x / y));
        CHECK(X.pow(2).contains(x * x));
        CHECK((X * Y).round_out(20).contains(x * y));
    }
}

TEST_CASE("interval_pow examples") {
    RatInterval one = interval_pow(RatInterval(1), Rational(9, 14));
    CHECK(one.lo() == Rational(1));
    CHECK(one.hi() == Rational(1));
    RatInterval p = interval_pow(RatInterval(Rational(7, 9)), Rational(9, 14));
    // Independent oracle: exp(9/14 * log(7/9)) in 50-digit floating point.
    Big o = boost::multiprecision::exp(Big(9) / 14 * boost::multiprecision::log(Big(7) / 9));
    CHECK(big(p.lo()) <= o);
    CHECK(o <= big(p.hi()));
    // The anchor 0.850817 agrees with the true value 0.8508161 to within 1e-6.
    CHECK((p.lo() - R("0.850817")).abs() < R("1e-6"));
    CHECK((p.hi() - R("0.850817")).abs() < R("1e-6"));
    CHECK(p.width() < Rational::pow10(-30));
    RatInterval s = interval_pow(RatInterval(40), Rational(1, 2));
    CHECK(s.lo() >= R("6.3245"));
    CHECK(s.hi() <= R("6.3246"));
    CHECK_THROWS(interval_pow(RatInterval(Rational(-1), Rational(2)), Rational(1, 2)));
    RatInterval neg = interval_pow(RatInterval(Rational(2), Rational(3)), Rational(-3, 2));
    CHECK(neg.contains(R("0.25")));   // 3^-1.5 = 0.19 <= 0.25 <= 2^-1.5 = 0.35
}

TEST_CASE("interval_pow width shrinks with precision") {
    RatInterval b(Rational(7, 9));
    Rational prev = interval_pow(b, Rational(9, 14), 64).width();
    for (unsigned prec : {128u, 256u, 512u}) {
        Rational w = interval_pow(b, Rational(9, 14), prec).width();
        CHECK(w < prev);
        prev = w;
    }
}

TEST_CASE("poly_positive_on examples") {
    auto quartic = UniPoly::from_decimals({"2.5", "-4.2", "29", "-34", "4"}, "n");
    CHECK(poly_positive_on(quartic, Rational(7)).verdict == PolyVerdict::Positive);
    CHECK(quartic.eval(Rational(7)) == R("5748.9"));

    auto h1 = UniPoly::from_decimals({"-1.7", "19.6", "-51.6", "30.4"}, "n");
    CHECK(h1.eval(Rational(9)) == R("-85.7"));
    CHECK(poly_positive_on(-h1, Rational(9)).verdict == PolyVerdict::Positive);
    CHECK(poly_positive_on(h1, Rational(9)).verdict == PolyVerdict::Negative);

    auto x2m1 = UniPoly::from_decimals({"1", "0", "-1"});
    auto c = poly_positive_on(x2m1, Rational(0), Rational(2));
    REQUIRE(c.verdict == PolyVerdict::HasRoot);
    CHECK(c.root->exact());
    CHECK(c.root->lo == Rational(1));
    CHECK(c.describe() == "has-root-at 1");
}

TEST_CASE("poly_positive_on agrees with dense sampling") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int t = 0; t < 60; ++t) {
        std::vector<Rational> c;
        int deg = 1 + t % 5;
        for (int i = 0; i <= deg; ++i) c.push_back(Rational(d(rng)));
        if (c.back().is_zero()) c.back() = Rational(1);
        UniPoly p(c);
        Rational lo(-3), hi(3);
        auto cert = poly_positive_on(p, lo, hi);
        bool all_pos = true;
        for (int i = 0; i <= 1000; ++i) {
            Rational x = lo + (hi - lo) * Rational(i, 1000);
            if (p.eval(x).sign() <= 0) all_pos = false;
        }
        if (cert.verdict == PolyVerdict::Positive) CHECK(all_pos);
        if (all_pos) CHECK(cert.verdict != PolyVerdict::Negative);
        if (cert.verdict == PolyVerdict::HasRoot) {
            auto r = *cert.root;
            if (r.exact()) CHECK(p.eval(r.lo).is_zero());
            else CHECK(p.eval(r.lo).sign() * p.eval(r.hi).sign() <= 0);
        }
    }
}

TEST_CASE("root isolation counts") {
    // (x-1)(x-2)(x-3)^2
    UniPoly p = UniPoly::from_decimals({"1", "-1"}) * UniPoly::from_decimals({"1", "-2"}) *
                pow(UniPoly::from_decimals({"1", "-3"}), 2);
    auto roots = isolate_roots(p, Rational(0), std::nullopt, Rational(1, 1000));
    CHECK(roots.size() == 3);
    SturmChain s(p);
    CHECK(s.count_to_infinity(Rational(0)) == 3);
    CHECK(s.count(Rational(0), Rational(2)) == 2);
}

TEST_CASE("sqrt-polynomial sign certificates") {
    UniPoly n = UniPoly::x("n");
    UniPoly dp = (n - UniPoly(Rational(2), "n")) * (UniPoly(Rational(2), "n") * n - UniPoly(Rational(6), "n"));
    // sqrt((n-2)(2n-6)) - (n-2) > 0 for n >= 7
    auto c1 = sqrt_poly_sign(-(n - UniPoly(Rational(2), "n")), UniPoly(Rational(1), "n"), dp, Rational(7), std::nullopt);
    CHECK(c1.decided);
    CHECK(c1.sign == 1);
    // sqrt(2)(n-3) - n changes sign near n = 10.24
    auto c2 = sqrt_poly_sign(-n, n - UniPoly(Rational(3), "n"), UniPoly(Rational(2), "n"), Rational(7), std::nullopt);
    CHECK_FALSE(c2.decided);
    auto c3 = sqrt_poly_sign(-n, n - UniPoly(Rational(3), "n"), UniPoly(Rational(2), "n"), Rational(11), std::nullopt);
    CHECK(c3.decided);
    CHECK(c3.sign == 1);
}

TEST_CASE("symbolic D1*D2 identity") {
    UniPoly n = UniPoly::x("n");
    auto k = [](long v) { return UniPoly(Rational(v), "n"); };
    UniPoly dp = (n - k(2)) * (k(2) * n - k(6));
    SqrtExpr s = SqrtExpr::root(dp);
    SqrtExpr D1 = (s - SqrtExpr(RatFn(k(2)), dp)) * SqrtExpr(RatFn(k(1), n - k(4)), dp);
    SqrtExpr D2 = (SqrtExpr(RatFn(k(2)), dp) * s + SqrtExpr(RatFn(n * n - k(5) * n + k(8)), dp)) *
                  SqrtExpr(RatFn(k(1), (n - k(1)) * (n - k(1))), dp);
    SqrtExpr rhs = (SqrtExpr(RatFn(k(2)), dp) + s) * SqrtExpr(RatFn(k(1), n - k(1)), dp);
    CHECK((D1 * D2 - rhs).is_zero());
    QuadExt at7 = (D1 * D2).eval(Rational(7));
    CHECK(at7 == (QuadExt(2) + QuadExt::sqrt(Rational(40))) / QuadExt(6));
}
