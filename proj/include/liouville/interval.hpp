#pragma once

#include "liouville/rational.hpp"

#include <string>
#include <utility>

namespace lv {

inline constexpr unsigned kDefaultPrecision = 128;
inline constexpr unsigned kMaxPrecision = 1024;

// Closed interval with exact rational endpoints. Field operations are exact, so
// the only rounding happens in the transcendental helpers and in round_out().
class RatInterval {
public:
    RatInterval() = default;
    RatInterval(const Rational& x) : lo_(x), hi_(x) {}
    RatInterval(long x) : lo_(x), hi_(x) {}
    RatInterval(int x) : lo_(x), hi_(x) {}
    RatInterval(Rational lo, Rational hi);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational mid() const { return (lo_ + hi_) / Rational(2); }
    Rational width() const { return hi_ - lo_; }
    bool is_point() const { return lo_ == hi_; }

    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    bool positive() const { return lo_.sign() > 0; }
    bool negative() const { return hi_.sign() < 0; }
    // +1 / -1 when the sign is certain, 0 when the interval is the point zero,
    // and 2 when undecided.
    int certain_sign() const;

    // Outward rounding of both endpoints to dyadic numbers with `bits` significant bits.
    RatInterval round_out(unsigned bits) const;

    RatInterval& operator+=(const RatInterval& o);
    RatInterval& operator-=(const RatInterval& o);
    RatInterval& operator*=(const RatInterval& o);
    RatInterval& operator/=(const RatInterval& o);

    friend RatInterval operator+(RatInterval a, const RatInterval& b) { return a += b; }
    friend RatInterval operator-(RatInterval a, const RatInterval& b) { return a -= b; }
    friend RatInterval operator*(RatInterval a, const RatInterval& b) { return a *= b; }
    friend RatInterval operator/(RatInterval a, const RatInterval& b) { return a /= b; }
    friend RatInterval operator-(const RatInterval& a) { return RatInterval(-a.hi_, -a.lo_); }

    RatInterval pow(long e) const;
    RatInterval abs() const;

    std::pair<std::string, std::string> decimal(int digits = 20) const;

private:
    Rational lo_, hi_;
};

RatInterval hull(const RatInterval& a, const RatInterval& b);
RatInterval interval_min(const RatInterval& a, const RatInterval& b);

// Enclosure of base^e for a rational exponent; base must be strictly positive.
RatInterval interval_pow(const RatInterval& base, const Rational& e, unsigned precision = kDefaultPrecision);
RatInterval interval_sqrt(const RatInterval& x, unsigned precision = kDefaultPrecision);
RatInterval sqrt2_enclosure(unsigned precision = kDefaultPrecision);

} // namespace lv
