#include "liouville/interval.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace lv {

namespace {

class Mpfr {
public:
    explicit Mpfr(unsigned prec) { mpfr_init2(x_, static_cast<mpfr_prec_t>(prec)); }
    ~Mpfr() { mpfr_clear(x_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return x_; }

    Rational to_rational() {
        mpq_class q;
        mpfr_get_q(q.get_mpq_t(), x_);
        return Rational(q);
    }

private:
    mpfr_t x_;
};

void set_q(Mpfr& m, const Rational& r, mpfr_rnd_t rnd) {
    mpfr_set_q(m.get(), r.raw().get_mpq_t(), rnd);
}

// Directed-rounded x^(a/b) for x > 0 held in an MPFR value.
Rational pow_directed(const Rational& x, const Rational& e, unsigned prec, mpfr_rnd_t rnd) {
    if (!e.den().fits_ulong_p() || !e.num().fits_slong_p())
        throw std::domain_error("interval_pow: exponent too large");
    long a = e.num().get_si();
    unsigned long b = e.den().get_ui();
    // Work with 32 guard bits; the final result is rounded in direction rnd.
    Mpfr base(prec + 32), t(prec + 32), r(prec);
    // Choose the base rounding so that every step moves the same way.
    bool increasing = a > 0;
    mpfr_rnd_t base_rnd = (increasing == (rnd == MPFR_RNDU)) ? MPFR_RNDU : MPFR_RNDD;
    set_q(base, x, base_rnd);
    mpfr_pow_si(t.get(), base.get(), a, rnd);
    mpfr_rootn_ui(r.get(), t.get(), b, rnd);
    return r.to_rational();
}

} // namespace

RatInterval::RatInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) throw std::invalid_argument("interval: lo > hi");
}

int RatInterval::certain_sign() const {
    if (lo_.sign() > 0) return 1;
    if (hi_.sign() < 0) return -1;
    if (lo_.is_zero() && hi_.is_zero()) return 0;
    return 2;
}

RatInterval RatInterval::round_out(unsigned bits) const {
    if (is_point() && lo_.den() == 1) return *this;
    Mpfr a(bits), b(bits);
    set_q(a, lo_, MPFR_RNDD);
    set_q(b, hi_, MPFR_RNDU);
    return RatInterval(a.to_rational(), b.to_rational());
}

RatInterval& RatInterval::operator+=(const RatInterval& o) {
    lo_ += o.lo_;
    hi_ += o.hi_;
    return *this;
}

RatInterval& RatInterval::operator-=(const RatInterval& o) {
    Rational nlo = lo_ - o.hi_;
    hi_ = hi_ - o.lo_;
    lo_ = std::move(nlo);
    return *this;
}

RatInterval& RatInterval::operator*=(const RatInterval& o) {
    if (is_point() && o.is_point()) {
        lo_ *= o.lo_;
        hi_ = lo_;
        return *this;
    }
    Rational a = lo_ * o.lo_, b = lo_ * o.hi_, c = hi_ * o.lo_, d = hi_ * o.hi_;
    lo_ = min(min(a, b), min(c, d));
    hi_ = max(max(a, b), max(c, d));
    return *this;
}

RatInterval& RatInterval::operator/=(const RatInterval& o) {
    if (o.contains_zero()) throw std::domain_error("interval: division by an interval containing zero");
    return *this *= RatInterval(o.hi_.inverse(), o.lo_.inverse());
}

RatInterval RatInterval::pow(long e) const {
    if (e < 0) return RatInterval(1) / pow(-e);
    if (e == 0) return RatInterval(1);
    if (e % 2 == 1 || lo_.sign() >= 0) {
        if (lo_.sign() >= 0 || e % 2 == 1) return RatInterval(lo_.pow(e), hi_.pow(e));
    }
    if (hi_.sign() <= 0) return RatInterval(hi_.pow(e), lo_.pow(e));
    return RatInterval(Rational(0), max(lo_.pow(e), hi_.pow(e)));
}

RatInterval RatInterval::abs() const {
    if (lo_.sign() >= 0) return *this;
    if (hi_.sign() <= 0) return -*this;
    return RatInterval(Rational(0), max(-lo_, hi_));
}

std::pair<std::string, std::string> RatInterval::decimal(int digits) const {
    return {lo_.decimal(digits, Round::Down), hi_.decimal(digits, Round::Up)};
}

RatInterval hull(const RatInterval& a, const RatInterval& b) {
    return RatInterval(min(a.lo(), b.lo()), max(a.hi(), b.hi()));
}

RatInterval interval_min(const RatInterval& a, const RatInterval& b) {
    return RatInterval(min(a.lo(), b.lo()), min(a.hi(), b.hi()));
}

RatInterval interval_pow(const RatInterval& base, const Rational& e, unsigned precision) {
    if (base.lo().sign() <= 0) throw std::domain_error("interval_pow: base must be positive");
    if (e.is_zero()) return RatInterval(1);
    if (e.is_integer() && e.num().fits_slong_p()) return base.pow(e.num().get_si());
    if (base.is_point() && base.lo() == Rational(1)) return RatInterval(1);
    // x^e is monotone in x: increasing for e > 0, decreasing for e < 0.
    const Rational& at_lo = e.sign() > 0 ? base.lo() : base.hi();
    const Rational& at_hi = e.sign() > 0 ? base.hi() : base.lo();
    return RatInterval(pow_directed(at_lo, e, precision, MPFR_RNDD),
                       pow_directed(at_hi, e, precision, MPFR_RNDU));
}

RatInterval interval_sqrt(const RatInterval& x, unsigned precision) {
    if (x.lo().sign() < 0) throw std::domain_error("interval_sqrt: negative argument");
    Mpfr a(precision + 32), b(precision + 32), ra(precision), rb(precision);
    set_q(a, x.lo(), MPFR_RNDD);
    set_q(b, x.hi(), MPFR_RNDU);
    mpfr_sqrt(ra.get(), a.get(), MPFR_RNDD);
    mpfr_sqrt(rb.get(), b.get(), MPFR_RNDU);
    return RatInterval(ra.to_rational(), rb.to_rational());
}

RatInterval sqrt2_enclosure(unsigned precision) { return interval_sqrt(RatInterval(2), precision); }

} // namespace lv
