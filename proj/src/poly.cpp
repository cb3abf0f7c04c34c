#include "liouville/poly.hpp"

#include <stdexcept>

namespace lv {

UniPoly::UniPoly(std::vector<Rational> coeffs, std::string var) : c_(std::move(coeffs)), var_(std::move(var)) {
    trim();
}

UniPoly UniPoly::from_decimals(const std::vector<std::string>& high_first, std::string var) {
    std::vector<Rational> c;
    for (auto it = high_first.rbegin(); it != high_first.rend(); ++it) c.push_back(Rational::parse(*it));
    return UniPoly(std::move(c), std::move(var));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::eval(const Rational& x) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

RatInterval UniPoly::eval(const RatInterval& x) const {
    RatInterval r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + RatInterval(*it);
    return r;
}

double UniPoly::eval(double x) const {
    double r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->to_double();
    return r;
}

UniPoly UniPoly::derivative() const {
    std::vector<Rational> d;
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
    return UniPoly(std::move(d), var_);
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * lead().inverse();
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly r(std::vector<Rational>{}, var_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * inner + UniPoly(*it, var_);
    return r;
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        if (!s.empty()) s += c.sign() < 0 ? " - " : " + ";
        else if (c.sign() < 0) s += "-";
        Rational a = c.abs();
        bool unit = a == Rational(1);
        if (!unit || i == 0) s += a.str();
        if (i > 0) s += (unit ? "" : "*") + var_ + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw std::domain_error("poly: division by zero polynomial");
    std::vector<Rational> rem = a.c_;
    int db = b.degree();
    int dq = a.degree() - db;
    std::vector<Rational> quo(dq >= 0 ? static_cast<size_t>(dq + 1) : 0, Rational(0));
    Rational inv = b.lead().inverse();
    for (int k = dq; k >= 0; --k) {
        Rational f = rem[static_cast<size_t>(k + db)] * inv;
        quo[static_cast<size_t>(k)] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(k + j)] -= f * b.c_[static_cast<size_t>(j)];
    }
    q = UniPoly(std::move(quo), a.var_);
    r = UniPoly(std::move(rem), a.var_);
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly q, r;
        divmod(x, y, q, r);
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

UniPoly pow(const UniPoly& p, unsigned e) {
    UniPoly r(Rational(1), p.var());
    for (unsigned i = 0; i < e; ++i) r *= p;
    return r;
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.degree() <= 0) return p;
    UniPoly g = UniPoly::gcd(p, p.derivative());
    if (g.degree() == 0) return p;
    UniPoly q, r;
    UniPoly::divmod(p, g, q, r);
    return q;
}

SturmChain::SturmChain(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("sturm: zero polynomial");
    chain_.push_back(squarefree_part(p));
    if (chain_.front().degree() == 0) return;
    chain_.push_back(chain_.front().derivative());
    while (true) {
        UniPoly q, r;
        UniPoly::divmod(chain_[chain_.size() - 2], chain_.back(), q, r);
        if (r.is_zero()) break;
        // Positive rescaling keeps sign sequences and tames coefficient growth.
        Rational lc = r.lead().abs();
        chain_.push_back(-(r * lc.inverse()));
    }
}

int SturmChain::variations(const Rational& x) const {
    int v = 0, prev = 0;
    for (const auto& p : chain_) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int SturmChain::variations_at_infinity() const {
    int v = 0, prev = 0;
    for (const auto& p : chain_) {
        int s = p.sign_at_infinity();
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int SturmChain::count(const Rational& a, const Rational& b) const {
    if (b <= a) return 0;
    return variations(a) - variations(b);
}

int SturmChain::count_to_infinity(const Rational& a) const { return variations(a) - variations_at_infinity(); }

Rational cauchy_bound(const UniPoly& p) {
    if (p.degree() <= 0) return Rational(1);
    Rational m(0);
    for (int i = 0; i < p.degree(); ++i) m = max(m, (p.coeff(i) / p.lead()).abs());
    return m + Rational(1);
}

namespace {

void isolate_rec(const SturmChain& s, const Rational& a, const Rational& b, int n, const Rational& tol,
                 std::vector<RootInterval>& out) {
    // Invariant: exactly n distinct roots in (a, b]. A root hit exactly by a
    // midpoint ends up as the right end of its interval.
    if (n == 0) return;
    if (n == 1 && b - a <= tol) {
        out.push_back({a, b});
        return;
    }
    Rational m = (a + b) / Rational(2);
    int left = s.count(a, m);
    isolate_rec(s, a, m, left, tol, out);
    isolate_rec(s, m, b, n - left, tol, out);
}

} // namespace

std::vector<RootInterval> isolate_roots(const UniPoly& p, const Rational& lo, const std::optional<Rational>& hi,
                                        const Rational& tol) {
    std::vector<RootInterval> out;
    if (p.is_zero()) throw std::domain_error("isolate_roots: zero polynomial");
    SturmChain s(p);
    Rational top = hi ? *hi : max(lo, cauchy_bound(s.base())) + Rational(1);
    if (top < lo) return out;
    if (s.base().sign_at(lo) == 0) out.push_back({lo, lo});
    int n = s.count(lo, top);
    isolate_rec(s, lo, top, n, tol, out);
    for (auto& r : out)
        if (!r.exact() && s.base().sign_at(r.hi) == 0) r.lo = r.hi;
    return out;
}

std::string PolyCertificate::describe() const {
    switch (verdict) {
    case PolyVerdict::Positive: return "positive";
    case PolyVerdict::Negative: return "negative";
    case PolyVerdict::HasRoot:
        if (root->exact()) return "has-root-at " + root->lo.str();
        return "has-root-in [" + root->lo.decimal(12, Round::Down) + ", " + root->hi.decimal(12, Round::Up) + "]";
    }
    return "";
}

PolyCertificate poly_positive_on(const UniPoly& p, const Rational& lower, const std::optional<Rational>& upper) {
    if (p.is_zero()) throw std::domain_error("poly_positive_on: zero polynomial");
    PolyCertificate cert;
    auto roots = isolate_roots(p, lower, upper, Rational(1, 1 << 20));
    if (!roots.empty()) {
        cert.verdict = PolyVerdict::HasRoot;
        cert.root = roots.front();
        for (auto& r : roots)
            if (r.lo < cert.root->lo) cert.root = r;
        return cert;
    }
    cert.verdict = p.sign_at(lower) > 0 ? PolyVerdict::Positive : PolyVerdict::Negative;
    return cert;
}

} // namespace lv
