#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace lv {

enum class Round { Down, Up, Nearest };

// Exact rational backed by GMP. Always canonical (reduced, positive denominator).
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(int v) : q_(static_cast<long>(v)) {}
    Rational(long num, long den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    explicit Rational(const mpz_class& z) : q_(z) {}

    // Accepts "a", "a/b", "-1.25", "1e-6", "2.5e3". Decimals are exact.
    static Rational parse(const std::string& s);
    // Exact value of a finite double (binary fraction).
    static Rational from_double(double x);
    static Rational pow10(int e);

    const mpq_class& raw() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    double to_double() const { return q_.get_d(); }
    long double to_long_double() const;

    Rational abs() const;
    Rational inverse() const;
    Rational pow(long e) const;
    mpz_class floor() const;
    mpz_class ceil() const;

    // "a" or "a/b"
    std::string str() const;
    // Decimal string with `digits` significant digits, rounded in the given direction.
    std::string decimal(int digits = 20, Round r = Round::Nearest) const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class q_;
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// Shorthand for decimal constants: R("1.7") == 17/10.
inline Rational R(const char* s) { return Rational::parse(s); }

} // namespace lv
