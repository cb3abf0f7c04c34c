#pragma once

#include "liouville/interval.hpp"
#include "liouville/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lv {

// Dense univariate polynomial with exact rational coefficients, lowest degree first.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs, std::string var = "x");
    UniPoly(const Rational& c, std::string var = "x") : UniPoly(std::vector<Rational>{c}, std::move(var)) {}

    static UniPoly x(std::string var = "x") { return UniPoly({Rational(0), Rational(1)}, std::move(var)); }
    // From decimal strings, highest degree first: from_decimals({"-1.7", "19.6", ...}).
    static UniPoly from_decimals(const std::vector<std::string>& high_first, std::string var = "x");

    const std::vector<Rational>& coeffs() const { return c_; }
    const std::string& var() const { return var_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& lead() const { return c_.back(); }
    Rational coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[static_cast<size_t>(i)] : Rational(0); }

    Rational eval(const Rational& x) const;
    RatInterval eval(const RatInterval& x) const;
    double eval(double x) const;
    int sign_at(const Rational& x) const { return eval(x).sign(); }
    // Sign as x -> +infinity.
    int sign_at_infinity() const { return is_zero() ? 0 : lead().sign(); }

    UniPoly derivative() const;
    UniPoly monic() const;
    UniPoly compose(const UniPoly& inner) const;
    std::string str() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& s);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
    friend UniPoly operator-(const UniPoly& a) { return a * Rational(-1); }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
    static UniPoly gcd(const UniPoly& a, const UniPoly& b);

private:
    void trim();
    std::vector<Rational> c_;
    std::string var_ = "x";
};

UniPoly pow(const UniPoly& p, unsigned e);
UniPoly squarefree_part(const UniPoly& p);

class SturmChain {
public:
    explicit SturmChain(const UniPoly& p);
    // Number of distinct real roots in (a, b].
    int count(const Rational& a, const Rational& b) const;
    int count_to_infinity(const Rational& a) const;
    const UniPoly& base() const { return chain_.front(); }

private:
    int variations(const Rational& x) const;
    int variations_at_infinity() const;
    std::vector<UniPoly> chain_;
};

// Upper bound on the absolute value of every real root.
Rational cauchy_bound(const UniPoly& p);

struct RootInterval {
    Rational lo, hi;   // root lies in [lo, hi]; lo == hi means an exact rational root
    bool exact() const { return lo == hi; }
};

// Isolating intervals for all distinct real roots in [lo, hi] (hi absent means +infinity),
// each refined to width <= tol.
std::vector<RootInterval> isolate_roots(const UniPoly& p, const Rational& lo,
                                        const std::optional<Rational>& hi, const Rational& tol);

enum class PolyVerdict { Positive, Negative, HasRoot };

struct PolyCertificate {
    PolyVerdict verdict = PolyVerdict::Positive;
    std::optional<RootInterval> root;   // set for HasRoot
    std::string describe() const;
};

// Exact decision of p > 0 on [lower, upper] (upper absent means [lower, +infinity)).
// Negative means p < 0 throughout; HasRoot reports the smallest root in range.
PolyCertificate poly_positive_on(const UniPoly& p, const Rational& lower,
                                 const std::optional<Rational>& upper = std::nullopt);

} // namespace lv
