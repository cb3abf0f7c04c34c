#include "liouville/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace lv {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational: division by zero");
    q_ /= o.q_;
    return *this;
}

static mpz_class parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rational: empty integer");
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("rational: bad integer '" + s + "'");
    for (size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("rational: bad integer '" + s + "'");
    return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
}

Rational Rational::pow10(int e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(mpq_class(1, p)) : Rational(p);
}

Rational Rational::parse(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("rational: empty string");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rational a = parse(s.substr(0, slash));
        Rational b = parse(s.substr(slash + 1));
        if (b.is_zero()) throw std::invalid_argument("rational: zero denominator in '" + raw + "'");
        return a / b;
    }

    int exp10 = 0;
    auto e = s.find_first_of("eE");
    if (e != std::string::npos) {
        std::string es = s.substr(e + 1);
        exp10 = static_cast<int>(parse_int(es).get_si());
        s = s.substr(0, e);
    }
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    auto dot = s.find('.');
    std::string digits = s;
    if (dot != std::string::npos) {
        digits = s.substr(0, dot) + s.substr(dot + 1);
        exp10 -= static_cast<int>(s.size() - dot - 1);
    }
    if (digits.empty()) throw std::invalid_argument("rational: bad number '" + raw + "'");
    for (char c : digits)
        if (c < '0' || c > '9') throw std::invalid_argument("rational: bad number '" + raw + "'");
    Rational r(mpz_class(digits, 10));
    r *= pow10(exp10);
    return neg ? -r : r;
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("rational: non-finite double");
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), x);
    return Rational(q);
}

long double Rational::to_long_double() const {
    // Enough for diagnostics; certificates never go through here.
    mpf_class f(q_, 128);
    long exp;
    double mant = mpf_get_d_2exp(&exp, f.get_mpf_t());
    mpf_class rest = f - mpf_class(std::ldexp(mant, static_cast<int>(exp)), 128);
    return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp)) + rest.get_d();
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("rational: inverse of zero");
    return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(mpq_class(n, d));
}

mpz_class Rational::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

mpz_class Rational::ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

std::string Rational::str() const { return q_.get_str(10); }

std::string Rational::decimal(int digits, Round r) const {
    if (is_zero()) return "0";
    bool neg = sign() < 0;
    Rational a = abs();
    // Find e with 10^e <= a < 10^(e+1).
    int e = static_cast<int>(std::floor(std::log10(std::fabs(a.to_double()))));
    while (pow10(e) > a) --e;
    while (pow10(e + 1) <= a) ++e;
    int shift = digits - 1 - e;
    Rational scaled = a * pow10(shift);
    // Directed rounding of |x| depends on the sign of x.
    Round mag = r;
    if (neg && r == Round::Down) mag = Round::Up;
    else if (neg && r == Round::Up) mag = Round::Down;
    mpz_class m;
    if (mag == Round::Down) m = scaled.floor();
    else if (mag == Round::Up) m = scaled.ceil();
    else m = (scaled + Rational(1, 2)).floor();
    std::string ds = m.get_str(10);
    // Rounding may have produced one extra digit (e.g. 9.99 -> 10.0).
    if (static_cast<int>(ds.size()) > digits) {
        ++e;
        ds.pop_back();
    }
    std::string out = neg ? "-" : "";
    if (e >= -5 && e < digits) {
        if (e >= 0) {
            std::string ip = ds.substr(0, static_cast<size_t>(e + 1));
            while (static_cast<int>(ip.size()) < e + 1) ip += '0';
            std::string fp = static_cast<int>(ds.size()) > e + 1 ? ds.substr(static_cast<size_t>(e + 1)) : "";
            while (!fp.empty() && fp.back() == '0') fp.pop_back();
            out += ip;
            if (!fp.empty()) out += "." + fp;
        } else {
            std::string fp = std::string(static_cast<size_t>(-e - 1), '0') + ds;
            while (!fp.empty() && fp.back() == '0') fp.pop_back();
            out += "0." + fp;
        }
    } else {
        std::string fp = ds.substr(1);
        while (!fp.empty() && fp.back() == '0') fp.pop_back();
        out += ds.substr(0, 1);
        if (!fp.empty()) out += "." + fp;
        out += "e" + std::to_string(e);
    }
    return out;
}

} // namespace lv
