#include "doctest.h"

#include "liouville/identities.hpp"

#include <cmath>
#include <functional>
#include <vector>

using namespace lv;

namespace {

using LD = long double;
using Vec = std::vector<LD>;

// The cubic polynomial whose 3-jet at the origin is `j`, differentiated directly.
struct Poly3 {
    const Jet3<double>& j;
    int n;

    Vec grad(const Vec& x) const {
        Vec r(n, 0);
        r[0] = j.g;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                r[a] += j.h(a, b) * x[b];
                for (int c = 0; c < n; ++c) r[a] += 0.5L * j.d(a, b, c) * x[b] * x[c];
            }
        return r;
    }
    std::vector<Vec> hess(const Vec& x) const {
        std::vector<Vec> r(n, Vec(n, 0));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                r[a][b] = j.h(a, b);
                for (int c = 0; c < n; ++c) r[a][b] += j.d(a, b, c) * x[c];
            }
        return r;
    }
    LD value(const Vec& x) const {
        LD s = j.v;
        for (int a = 0; a < n; ++a) {
            s += (a == 0 ? LD(j.g) : 0) * x[a];
            for (int b = 0; b < n; ++b) {
                s += 0.5L * j.h(a, b) * x[a] * x[b];
                for (int c = 0; c < n; ++c) s += j.d(a, b, c) * x[a] * x[b] * x[c] / 6;
            }
        }
        return s;
    }
};

using Field = std::function<Vec(const Vec&)>;

// Central differences at h and h/2 combined by Richardson extrapolation.
LD divergence(const Field& F, int n, LD h = 1e-3L) {
    auto central = [&](LD step) {
        LD s = 0;
        for (int i = 0; i < n; ++i) {
            Vec xp(n, 0), xm(n, 0);
            xp[i] = step;
            xm[i] = -step;
            s += (F(xp)[i] - F(xm)[i]) / (2 * step);
        }
        return s;
    };
    return (4 * central(h / 2) - central(h)) / 3;
}

DivergenceBundle<double> oracle_bundle(const Jet3<double>& j, const LabSetup& s) {
    Poly3 f{j, j.n};
    const int n = j.n;
    LD al = s.alpha.to_double(), ga = s.gamma.to_double(), p = s.prob.p.to_double(), q = s.prob.q.to_double();
    auto gnorm = [&](const Vec& g) {
        LD t = 0;
        for (LD x : g) t += x * x;
        return std::sqrt(t);
    };
    auto weighted = [&](LD a, LD b, std::function<Vec(const Vec&, const Vec&, const std::vector<Vec>&)> Y) {
        return Field([=, &f](const Vec& x) {
            Vec gr = f.grad(x);
            auto H = f.hess(x);
            LD wgt = std::pow(f.value(x), a) * std::pow(gnorm(gr), b);
            Vec y = Y(x, gr, H);
            for (auto& e : y) e *= wgt;
            return y;
        });
    };
    auto lap = [n](const std::vector<Vec>& H) {
        LD t = 0;
        for (int i = 0; i < n; ++i) t += H[i][i];
        return t;
    };
    auto grad_only = [](const Vec&, const Vec& gr, const std::vector<Vec>&) { return gr; };
    DivergenceBundle<double> d;
    d.A = static_cast<double>(divergence(weighted(al, ga,
                                                  [&](const Vec&, const Vec& gr, const std::vector<Vec>& H) {
                                                      Vec y = gr;
                                                      LD L = lap(H);
                                                      for (auto& e : y) e *= L;
                                                      return y;
                                                  }),
                                         n));
    d.DE = static_cast<double>(divergence(weighted(al, ga,
                                                   [&](const Vec&, const Vec& gr, const std::vector<Vec>& H) {
                                                       Vec y(n, 0);
                                                       LD L = lap(H);
                                                       for (int a = 0; a < n; ++a)
                                                           for (int b = 0; b < n; ++b)
                                                               y[a] += (H[a][b] - (a == b ? L / n : 0)) * gr[b];
                                                       return y;
                                                   }),
                                          n));
    d.D1 = static_cast<double>(divergence(weighted(al - 1, ga + 2, grad_only), n));
    d.Dq = static_cast<double>(divergence(weighted(al, ga + q, grad_only), n));
    d.Dp = static_cast<double>(divergence(weighted(al + p, ga, grad_only), n));
    return d;
}

} // namespace

TEST_CASE("jets are reproducible and solve the equation to first order") {
    auto s = default_setup(7, FrameKind::GammaShift);
    auto a = sample_jet<double>(11, 7, JetMode::Pde, s.prob);
    auto b = sample_jet<double>(11, 7, JetMode::Pde, s.prob);
    CHECK(a.H == b.H);
    CHECK(a.D3 == b.D3);
    CHECK(trial_seed(1, 2) != trial_seed(1, 3));
    CHECK(trial_seed(1, 2) != trial_seed(2, 2));
    // Independent check of the constraint with the polynomial oracle's hessian.
    Poly3 f{a, 7};
    double p = s.prob.p.to_double(), q = s.prob.q.to_double();
    auto lap_at = [&](const Vec& x) {
        auto H = f.hess(x);
        LD t = 0;
        for (int i = 0; i < 7; ++i) t += H[i][i];
        return t;
    };
    auto rhs_at = [&](const Vec& x) {
        Vec g = f.grad(x);
        LD gn = 0;
        for (LD e : g) gn += e * e;
        return -std::pow(f.value(x), LD(p)) - std::pow(std::sqrt(gn), LD(q));
    };
    Vec zero(7, 0);
    CHECK(std::fabs(static_cast<double>(lap_at(zero) - rhs_at(zero))) < 1e-12);
    for (int i = 0; i < 7; ++i) {
        Vec xp(7, 0), xm(7, 0);
        xp[i] = 1e-4L;
        xm[i] = -1e-4L;
        LD dl = (lap_at(xp) - lap_at(xm)) / 2e-4L, dr = (rhs_at(xp) - rhs_at(xm)) / 2e-4L;
        CHECK(std::fabs(static_cast<double>(dl - dr)) < 1e-6);
    }
    for (double x : a.H) CHECK(std::fabs(x) <= 3);
    CHECK(a.v >= 0.5);
    CHECK(a.v < 1.5);
}

TEST_CASE("laplacian weight identity at n = 4, gamma = 3, alpha = -2 against finite differences") {
    auto s = default_setup(4, FrameKind::GammaShift);
    REQUIRE(s.gamma == Rational(3));
    s.alpha = -2;
    auto j = sample_jet<double>(7, 4, JetMode::Free, s.prob);
    auto ext = oracle_bundle(j, s);
    auto own = divergences<double>(j, s.alpha, s.gamma, s.prob.p, s.prob.q, std::pow(j.g, s.prob.q.to_double()));
    CHECK(std::fabs(ext.D1 - own.D1) < 1e-8 * (1 + std::fabs(own.D1)));
    auto r = evaluate_identity<double>(IdentityId::LaplacianWeight, j, s, {}, ext);
    CHECK(r.residual < 1e-9);
}

TEST_CASE("every identity with oracle divergences") {
    for (int n : {3, 5, 7}) {
        for (FrameKind f : {FrameKind::GammaZero, FrameKind::GammaShift}) {
            auto s = default_setup(n, f);
            auto j = sample_jet<double>(100 + n, n, JetMode::Pde, s.prob);
            auto ext = oracle_bundle(j, s);
            for (IdentityId id : kAllIdentities) {
                auto r = evaluate_identity<double>(id, j, s, {}, ext);
                INFO(identity_name(id) << " n=" << n << " " << frame_kind_name(f));
                CHECK(r.residual < 1e-9);
            }
        }
    }
}

TEST_CASE("master identity at n = 7 in the shifted frame") {
    auto s = default_setup(7, FrameKind::GammaShift);
    CHECK(s.prob.p == Rational(9, 5));
    CHECK(s.prob.M == Rational(1));
    auto j = sample_jet<double>(7, 7, JetMode::Pde, s.prob);
    auto r = evaluate_identity<double>(IdentityId::Master, j, s, {}, oracle_bundle(j, s));
    CHECK(r.residual < 1e-9);
    auto free = sample_jet<double>(7, 7, JetMode::Free, s.prob);
    CHECK(evaluate_identity<double>(IdentityId::Master, free, s).residual > 1e-3);
}

TEST_CASE("exactly one reading of the master identity survives") {
    auto s = default_setup(7, FrameKind::GammaShift);
    auto j = sample_jet<double>(3, 7, JetMode::Pde, s.prob);
    ResidualOptions va{BaseReading::VAlpha, SplitReading::Rows}, vg{BaseReading::VGamma, SplitReading::Rows};
    ResidualOptions lit{BaseReading::VAlpha, SplitReading::Literal};
    CHECK(evaluate_identity<double>(IdentityId::Master, j, s, va).residual < 1e-9);
    CHECK(evaluate_identity<double>(IdentityId::Master, j, s, vg).residual > 1e-3);
    CHECK(evaluate_identity<double>(IdentityId::Master, j, s, lit).residual > 1e-3);
    CHECK(evaluate_identity<double>(IdentityId::SquareExpansion, j, s, vg).residual > 1e-3);
}

TEST_CASE("extended precision meets the tight tolerance") {
    auto s = default_setup(10, FrameKind::GammaShift);
    auto j = sample_jet<Extended>(5, 10, JetMode::Pde, s.prob);
    for (IdentityId id : kAllIdentities) CHECK(evaluate_identity<Extended>(id, j, s).residual < Extended(1e-25));
}

TEST_CASE("exact arithmetic gives zero residuals") {
    for (int n : {3, 6, 9}) {
        for (FrameKind f : {FrameKind::GammaZero, FrameKind::GammaShift}) {
            auto s = exact_setup(n, f);
            auto j = sample_jet<Rational>(n, n, JetMode::Pde, s.prob);
            for (IdentityId id : kAllIdentities) CHECK(evaluate_identity<Rational>(id, j, s).residual.is_zero());
        }
    }
    auto s = default_setup(7, FrameKind::GammaShift);
    CHECK_THROWS_AS(sample_jet<Rational>(1, 7, JetMode::Pde, s.prob), DomainError);
    auto j = sample_jet<Rational>(1, 7, JetMode::Free, s.prob);
    CHECK_THROWS_AS(evaluate_identity<Rational>(IdentityId::Master, j, s), DomainError);
}

TEST_CASE("pointwise invariants") {
    auto s = default_setup(5, FrameKind::GammaZero);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto j = sample_jet<double>(seed, 5, JetMode::Free, s.prob);
        auto inv = invariants(j, s);
        CHECK(std::fabs(inv.trace_E) < 1e-13);
        CHECK(std::fabs(inv.trace_G) < 1e-13);
        CHECK(inv.cauchy_schwarz_gap >= -1e-13);
    }
}

TEST_CASE("rescaling multiplies every master term by one power of k") {
    for (double k : {0.5, 2.0, 5.0}) {
        auto sc = scaling_check(7, FrameKind::GammaShift, k, 9);
        CHECK(sc.max_deviation < 1e-12);
        CHECK(sc.signs_preserved);
        auto off = scaling_check(7, FrameKind::GammaShift, k, 9, Rational(1, 10));
        CHECK(off.max_deviation > 1e-4);
    }
}

TEST_CASE("identity lab run") {
    LabConfig c;
    c.trials = 200;
    auto r = run_identity_lab(c);
    CHECK(r.pass);
    CHECK(r.base_reading == "v^alpha");
    CHECK(r.split_reading == "rows");
    CHECK(r.negative_control_fails);
    CHECK(r.stats.size() == 4 * 2 * 9);
    c.threads = 3;
    auto r3 = run_identity_lab(c);
    CHECK(r3.pass);
    CHECK(r3.valpha_max == doctest::Approx(r.valpha_max).epsilon(1e-6));
    CHECK(identity_from_name("master") == IdentityId::Master);
    CHECK_FALSE(identity_from_name("nope"));
}
