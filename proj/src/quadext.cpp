#include "liouville/quadext.hpp"

#include <stdexcept>

namespace lv {

namespace {

// m = k^2 * s with s square-free, for the radicand sizes that occur here
// (trial division up to 10^6, then a perfect-square test on the cofactor).
void split_square(const mpz_class& m, mpz_class& k, mpz_class& s) {
    k = 1;
    s = 1;
    mpz_class rest = m;
    for (unsigned long p = 2; p < 1000000; p += (p == 2 ? 1 : 2)) {
        mpz_class pp = mpz_class(p) * p;
        if (pp > rest) break;
        while (mpz_divisible_p(rest.get_mpz_t(), pp.get_mpz_t()) != 0) {
            rest /= pp;
            k *= p;
        }
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            rest /= p;
            s *= p;
        }
    }
    if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
        k *= r;
    } else {
        s *= rest;
    }
}

} // namespace

QuadExt::QuadExt(const Rational& a, const Rational& b, const Rational& d) : a_(a) {
    if (d.sign() < 0) throw std::domain_error("quadext: negative radicand");
    if (b.is_zero() || d.is_zero()) return;
    // sqrt(N/D) = sqrt(N*D)/D
    mpz_class m = d.num() * d.den();
    mpz_class k, s;
    split_square(m, k, s);
    Rational coef = b * Rational(k) / Rational(d.den());
    if (s == 1) {
        a_ += coef;
        return;
    }
    b_ = coef;
    d_ = Rational(s);
}

Rational QuadExt::common_radicand(const QuadExt& o) const {
    if (b_.is_zero()) return o.d_;
    if (o.b_.is_zero()) return d_;
    if (d_ != o.d_) throw std::domain_error("quadext: mixed radicands " + d_.str() + " and " + o.d_.str());
    return d_;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    Rational d = common_radicand(o);
    *this = make(a_ + o.a_, b_ + o.b_, d);
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    Rational d = common_radicand(o);
    *this = make(a_ - o.a_, b_ - o.b_, d);
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    Rational d = common_radicand(o);
    *this = make(a_ * o.a_ + b_ * o.b_ * d, a_ * o.b_ + b_ * o.a_, d);
    return *this;
}

QuadExt QuadExt::inverse() const {
    Rational nm = norm();
    if (nm.is_zero()) throw std::domain_error("quadext: inverse of zero");
    return make(a_ / nm, -b_ / nm, d_);
}

int quad_sign(const Rational& a, const Rational& b, const Rational& d) {
    int sa = a.sign();
    int sb = d.is_zero() ? 0 : b.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with b^2 d.
    Rational lhs = a * a, rhs = b * b * d;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
}

int QuadExt::sign() const { return quad_sign(a_, b_, d_); }

RatInterval QuadExt::enclose(unsigned precision) const {
    if (b_.is_zero()) return RatInterval(a_);
    return RatInterval(a_) + RatInterval(b_) * interval_sqrt(RatInterval(d_), precision);
}

double QuadExt::to_double() const { return enclose(64).mid().to_double(); }

std::string QuadExt::str() const {
    if (b_.is_zero()) return a_.str();
    return a_.str() + (b_.sign() < 0 ? " - " : " + ") + b_.abs().str() + "*sqrt(" + d_.str() + ")";
}

} // namespace lv
