#pragma once

#include "liouville/poly.hpp"
#include "liouville/quadext.hpp"

#include <optional>
#include <string>

namespace lv {

// Rational function num/den in one variable, kept in lowest terms with monic denominator.
class RatFn {
public:
    RatFn() : num_(std::vector<Rational>{}), den_(Rational(1)) {}
    RatFn(const Rational& c, const std::string& var = "n") : num_(c, var), den_(Rational(1), var) {}
    RatFn(long c, const std::string& var = "n") : RatFn(Rational(c), var) {}
    RatFn(const UniPoly& p) : num_(p), den_(Rational(1), p.var()) {}
    RatFn(const UniPoly& num, const UniPoly& den);

    static RatFn var(const std::string& name = "n") { return RatFn(UniPoly::x(name)); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    Rational eval(const Rational& x) const;
    RatInterval eval(const RatInterval& x) const;
    RatFn inverse() const;

    RatFn& operator+=(const RatFn& o);
    RatFn& operator-=(const RatFn& o);
    RatFn& operator*=(const RatFn& o);
    RatFn& operator/=(const RatFn& o) { return *this *= o.inverse(); }
    friend RatFn operator+(RatFn a, const RatFn& b) { return a += b; }
    friend RatFn operator-(RatFn a, const RatFn& b) { return a -= b; }
    friend RatFn operator*(RatFn a, const RatFn& b) { return a *= b; }
    friend RatFn operator/(RatFn a, const RatFn& b) { return a /= b; }
    friend RatFn operator-(const RatFn& a) { return RatFn(-a.num_, a.den_); }
    friend bool operator==(const RatFn& a, const RatFn& b) { return (a - b).is_zero(); }

private:
    void normalize();
    UniPoly num_, den_;
};

// Outcome of an exact sign decision over a range of the variable.
struct SignCertificate {
    bool decided = false;
    int sign = 0;          // +1 / -1 when decided
    std::string detail;    // why undecided, or which root checks were done
};

// Exact sign of A(x) + B(x) sqrt(C(x)) on [lower, upper] (upper absent means +infinity).
// Decided iff the expression has no zero in the range; requires C > 0 there.
SignCertificate sqrt_poly_sign(const UniPoly& A, const UniPoly& B, const UniPoly& C, const Rational& lower,
                               const std::optional<Rational>& upper);

// a + b sqrt(c) with a, b rational functions and c a fixed polynomial in the same variable.
class SqrtExpr {
public:
    SqrtExpr() = default;
    SqrtExpr(RatFn a, RatFn b, UniPoly c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}
    SqrtExpr(const RatFn& a, const UniPoly& c) : a_(a), b_(Rational(0), c.var()), c_(c) {}

    static SqrtExpr root(const UniPoly& c) { return SqrtExpr(RatFn(Rational(0), c.var()), RatFn(Rational(1), c.var()), c); }

    const RatFn& a() const { return a_; }
    const RatFn& b() const { return b_; }
    const UniPoly& radicand() const { return c_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    QuadExt eval(const Rational& x) const;
    RatInterval enclose(const Rational& x, unsigned precision = kDefaultPrecision) const;
    SqrtExpr inverse() const;
    SignCertificate sign_on(const Rational& lower, const std::optional<Rational>& upper) const;

    SqrtExpr& operator+=(const SqrtExpr& o);
    SqrtExpr& operator-=(const SqrtExpr& o);
    SqrtExpr& operator*=(const SqrtExpr& o);
    SqrtExpr& operator/=(const SqrtExpr& o) { return *this *= o.inverse(); }
    friend SqrtExpr operator+(SqrtExpr x, const SqrtExpr& y) { return x += y; }
    friend SqrtExpr operator-(SqrtExpr x, const SqrtExpr& y) { return x -= y; }
    friend SqrtExpr operator*(SqrtExpr x, const SqrtExpr& y) { return x *= y; }
    friend SqrtExpr operator/(SqrtExpr x, const SqrtExpr& y) { return x /= y; }
    friend SqrtExpr operator-(const SqrtExpr& x) { return SqrtExpr(-x.a_, -x.b_, x.c_); }

private:
    const UniPoly& radicand_with(const SqrtExpr& o) const;
    RatFn a_, b_;
    UniPoly c_;
};

} // namespace lv
