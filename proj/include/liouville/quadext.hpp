#pragma once

#include "liouville/interval.hpp"
#include "liouville/rational.hpp"

#include <string>

namespace lv {

// a + b*sqrt(d) with d a square-free integer >= 2, or d = 0 for a plain rational.
// Arithmetic between elements with different nonzero radicands is rejected.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(const Rational& a) : a_(a) {}
    QuadExt(long a) : a_(a) {}
    QuadExt(int a) : a_(a) {}
    // Normalizes: the radicand is reduced to its square-free part and a square
    // radicand folds into the rational part.
    QuadExt(const Rational& a, const Rational& b, const Rational& d);

    static QuadExt sqrt(const Rational& d) { return QuadExt(Rational(0), Rational(1), d); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& d() const { return d_; }
    bool is_rational() const { return b_.is_zero(); }

    int sign() const;
    QuadExt conj() const { return make(a_, -b_, d_); }
    // Rational norm a^2 - b^2 d.
    Rational norm() const { return a_ * a_ - b_ * b_ * d_; }
    QuadExt inverse() const;
    RatInterval enclose(unsigned precision = kDefaultPrecision) const;
    double to_double() const;
    std::string str() const;

    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
    friend QuadExt operator-(const QuadExt& x) { return make(-x.a_, -x.b_, x.d_); }
    friend bool operator==(const QuadExt& x, const QuadExt& y) { return (x - y).sign() == 0; }
    friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadExt& x, const QuadExt& y) { return (x - y).sign() > 0; }

private:
    // Already-normalized parts.
    static QuadExt make(Rational a, Rational b, Rational d) {
        QuadExt x;
        x.a_ = std::move(a);
        x.b_ = std::move(b);
        x.d_ = x.b_.is_zero() ? Rational(0) : std::move(d);
        return x;
    }
    Rational common_radicand(const QuadExt& o) const;

    Rational a_, b_, d_;
};

// Exact sign of a + b*sqrt(d), d >= 0 rational; no normalization required.
int quad_sign(const Rational& a, const Rational& b, const Rational& d);

} // namespace lv
