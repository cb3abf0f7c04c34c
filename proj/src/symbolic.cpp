#include "liouville/symbolic.hpp"

#include <stdexcept>

namespace lv {

RatFn::RatFn(const UniPoly& num, const UniPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("ratfn: zero denominator");
    normalize();
}

void RatFn::normalize() {
    if (num_.is_zero()) {
        den_ = UniPoly(Rational(1), den_.var());
        return;
    }
    UniPoly g = UniPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        UniPoly q, r;
        UniPoly::divmod(num_, g, q, r);
        num_ = q;
        UniPoly::divmod(den_, g, q, r);
        den_ = q;
    }
    Rational lc = den_.lead();
    if (lc != Rational(1)) {
        num_ *= lc.inverse();
        den_ *= lc.inverse();
    }
}

Rational RatFn::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("ratfn: pole at " + x.str());
    return num_.eval(x) / d;
}

RatInterval RatFn::eval(const RatInterval& x) const { return num_.eval(x) / den_.eval(x); }

RatFn RatFn::inverse() const {
    if (num_.is_zero()) throw std::domain_error("ratfn: inverse of zero");
    return RatFn(den_, num_);
}

RatFn& RatFn::operator+=(const RatFn& o) {
    if (den_ == o.den_) num_ += o.num_;
    else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

RatFn& RatFn::operator-=(const RatFn& o) { return *this += -o; }

RatFn& RatFn::operator*=(const RatFn& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

namespace {

// Decide whether A + B sqrt(C) vanishes at the single root of N isolated in [lo, hi].
// Returns +1 when it provably does not vanish, 0 when it vanishes, -1 when undecided.
int nonvanishing_at_norm_root(const UniPoly& A, const UniPoly& B, const UniPoly& C, const SturmChain& norm,
                              Rational lo, Rational hi) {
    if (lo == hi) return quad_sign(A.eval(lo), B.eval(lo), C.eval(lo)) != 0 ? 1 : 0;
    UniPoly g = UniPoly::gcd(A, B);
    if (g.degree() > 0) {
        SturmChain gs(g);
        if (g.sign_at(lo) == 0 || gs.count(lo, hi) > 0) {
            // Shrink until the common factor's root and the norm's root separate or coincide.
            for (int it = 0; it < 400; ++it) {
                Rational m = (lo + hi) / Rational(2);
                if (norm.count(lo, m) > 0) hi = m;
                else lo = m;
                bool common = g.sign_at(lo) == 0 || gs.count(lo, hi) > 0;
                if (!common) break;
                if (it == 399) return 0;
            }
        }
    }
    SturmChain as(A), bs(B);
    for (int it = 0; it < 400; ++it) {
        bool a_free = A.sign_at(lo) != 0 && as.count(lo, hi) == 0;
        bool b_free = B.sign_at(lo) != 0 && bs.count(lo, hi) == 0;
        if (a_free && b_free) {
            int sa = A.sign_at(lo), sb = B.sign_at(lo);
            // A^2 = B^2 C at the root, so A + B sqrt(C) is 2A or 0.
            return sa == sb ? 1 : 0;
        }
        Rational m = (lo + hi) / Rational(2);
        if (norm.base().sign_at(m) == 0) return quad_sign(A.eval(m), B.eval(m), C.eval(m)) != 0 ? 1 : 0;
        if (norm.count(lo, m) > 0) hi = m;
        else lo = m;
    }
    return -1;
}

} // namespace

SignCertificate sqrt_poly_sign(const UniPoly& A, const UniPoly& B, const UniPoly& C, const Rational& lower,
                               const std::optional<Rational>& upper) {
    SignCertificate cert;
    auto sign_of_poly = [&](const UniPoly& P) -> SignCertificate {
        SignCertificate c;
        if (P.is_zero()) {
            c.detail = "identically zero";
            return c;
        }
        auto pc = poly_positive_on(P, lower, upper);
        if (pc.verdict == PolyVerdict::HasRoot) {
            c.detail = "polynomial " + pc.describe();
            return c;
        }
        c.decided = true;
        c.sign = pc.verdict == PolyVerdict::Positive ? 1 : -1;
        c.detail = "polynomial without roots in range";
        return c;
    };
    if (B.is_zero()) return sign_of_poly(A);

    auto cc = poly_positive_on(C, lower, upper);
    if (cc.verdict != PolyVerdict::Positive) {
        cert.detail = "radicand not positive on range (" + cc.describe() + ")";
        return cert;
    }
    UniPoly N = A * A - B * B * C;
    if (N.is_zero()) {
        cert.detail = "norm vanishes identically";
        return cert;
    }
    SturmChain ns(N);
    auto roots = isolate_roots(N, lower, upper, Rational(1, 1 << 10));
    for (const auto& r : roots) {
        int v = nonvanishing_at_norm_root(A, B, C, ns, r.lo, r.hi);
        if (v <= 0) {
            cert.detail = std::string(v == 0 ? "zero" : "undecided root") + " near [" + r.lo.decimal(10, Round::Down) +
                          ", " + r.hi.decimal(10, Round::Up) + "]";
            return cert;
        }
    }
    int s = quad_sign(A.eval(lower), B.eval(lower), C.eval(lower));
    if (s == 0) {
        cert.detail = "zero at the lower end";
        return cert;
    }
    cert.decided = true;
    cert.sign = s;
    cert.detail = "no zero in range; " + std::to_string(roots.size()) + " norm root(s) excluded";
    return cert;
}

const UniPoly& SqrtExpr::radicand_with(const SqrtExpr& o) const {
    if (b_.is_zero()) return o.c_;
    if (o.b_.is_zero()) return c_;
    if (!(c_ == o.c_)) throw std::domain_error("sqrtexpr: different radicands");
    return c_;
}

SqrtExpr& SqrtExpr::operator+=(const SqrtExpr& o) {
    UniPoly c = radicand_with(o);
    a_ += o.a_;
    b_ += o.b_;
    c_ = std::move(c);
    return *this;
}

SqrtExpr& SqrtExpr::operator-=(const SqrtExpr& o) { return *this += -o; }

SqrtExpr& SqrtExpr::operator*=(const SqrtExpr& o) {
    UniPoly c = radicand_with(o);
    RatFn na = a_ * o.a_ + b_ * o.b_ * RatFn(c);
    RatFn nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    c_ = std::move(c);
    return *this;
}

SqrtExpr SqrtExpr::inverse() const {
    RatFn norm = a_ * a_ - b_ * b_ * RatFn(c_);
    if (norm.is_zero()) throw std::domain_error("sqrtexpr: inverse of zero");
    return SqrtExpr(a_ / norm, -b_ / norm, c_);
}

QuadExt SqrtExpr::eval(const Rational& x) const {
    if (b_.is_zero()) return QuadExt(a_.eval(x));
    return QuadExt(a_.eval(x), b_.eval(x), c_.eval(x));
}

RatInterval SqrtExpr::enclose(const Rational& x, unsigned precision) const {
    RatInterval r(a_.eval(x));
    if (!b_.is_zero()) r += RatInterval(b_.eval(x)) * interval_sqrt(RatInterval(c_.eval(x)), precision);
    return r;
}

SignCertificate SqrtExpr::sign_on(const Rational& lower, const std::optional<Rational>& upper) const {
    // (an/ad) + (bn/bd) sqrt(c) = (an bd + bn ad sqrt(c)) / (ad bd)
    UniPoly D = a_.den() * b_.den();
    auto dc = poly_positive_on(D, lower, upper);
    if (dc.verdict == PolyVerdict::HasRoot) {
        SignCertificate c;
        c.detail = "denominator " + dc.describe();
        return c;
    }
    int sd = dc.verdict == PolyVerdict::Positive ? 1 : -1;
    UniPoly cc = b_.is_zero() ? UniPoly(Rational(1), c_.var()) : c_;
    SignCertificate c = sqrt_poly_sign(a_.num() * b_.den(), b_.num() * a_.den(), cc, lower, upper);
    c.sign *= sd;
    return c;
}

} // namespace lv
