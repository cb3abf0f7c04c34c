#include "liouville/identities.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <future>
#include <map>

namespace lv {

const char* identity_name(IdentityId id) {
    switch (id) {
    case IdentityId::LaplacianWeight: return "laplacian-weight";
    case IdentityId::SquareExpansion: return "square-expansion";
    case IdentityId::TracelessSum: return "traceless-sum";
    case IdentityId::EquationSquare: return "equation-square";
    case IdentityId::Master: return "master";
    case IdentityId::MultipliedN: return "multiplied-n";
    case IdentityId::MultipliedM: return "multiplied-m";
    case IdentityId::MultipliedGradient: return "multiplied-gradient";
    case IdentityId::KDecomposition: return "k-decomposition";
    }
    return "?";
}

std::optional<IdentityId> identity_from_name(const std::string& name) {
    for (IdentityId id : kAllIdentities)
        if (name == identity_name(id)) return id;
    return std::nullopt;
}

bool identity_needs_pde(IdentityId id) {
    switch (id) {
    case IdentityId::LaplacianWeight:
    case IdentityId::SquareExpansion:
    case IdentityId::TracelessSum: return false;
    default: return true;
    }
}

const char* frame_kind_name(FrameKind k) { return k == FrameKind::GammaZero ? "gamma-zero" : "gamma-shift"; }

const char* lab_precision_name(LabPrecision p) {
    switch (p) {
    case LabPrecision::Double: return "double";
    case LabPrecision::Extended: return "extended";
    case LabPrecision::Exact: return "exact";
    }
    return "?";
}

double lab_tolerance(LabPrecision p) {
    switch (p) {
    case LabPrecision::Double: return 1e-9;
    case LabPrecision::Extended: return 1e-25;
    case LabPrecision::Exact: return 0;
    }
    return 0;
}

LabSetup default_setup(int n, FrameKind kind) {
    if (n < 3) throw DomainError("identity lab needs n >= 3");
    LabSetup s;
    s.prob = ProblemParams::make(n, critical_p(n));
    s.kind = kind;
    s.eps = Rational(1, 1000);
    s.P = Rational(1, 100);
    s.T = Rational(1, 10);
    s.U = Rational(1, 5);
    if (kind == FrameKind::GammaZero) {
        auto fr = frame_gamma_zero(n, s.prob.p, s.P, s.eps);
        s.gamma = fr.gamma;
        s.alpha = fr.alpha;
        s.S = QuadExt(fr.S);
    } else {
        auto fr = frame_shift_or_three(n);
        s.gamma = fr.gamma;
        s.alpha = fr.alpha;
        s.S = fr.S;
    }
    return s;
}

LabSetup exact_setup(int n, FrameKind kind) {
    if (n < 3) throw DomainError("identity lab needs n >= 3");
    LabSetup s;
    // The identities hold for any p > 1, so the subcritical bound is not imposed here.
    s.prob.n = n;
    s.prob.p = 2;
    s.prob.q = critical_q(s.prob.p);
    s.prob.M = 0;
    s.prob.N = 1;
    s.kind = kind;
    s.eps = Rational(1, 1000);
    s.P = Rational(1, 100);
    s.T = Rational(1, 10);
    s.U = Rational(1, 5);
    if (kind == FrameKind::GammaZero) {
        s.gamma = 0;
        s.alpha = -2;
        s.S = QuadExt(Rational(1, n));
    } else {
        s.gamma = 4;
        s.alpha = -5;
        Rational mid = solve_S_exact(n, s.gamma).enclose().mid();
        // Round to a short rational; the identities hold for any S.
        mpz_class k = (mid * Rational(1000000)).floor();
        s.S = QuadExt(Rational(mpq_class(k, 1000000)));
    }
    return s;
}

namespace {

template <class T>
T quad_value(const QuadExt& x) {
    if (x.is_rational()) return to_real<T>(x.a());
    if constexpr (std::is_same_v<T, Rational>) {
        throw DomainError("irrational frame value in exact arithmetic");
    } else {
        using std::sqrt;
        return to_real<T>(x.a()) + to_real<T>(x.b()) * sqrt(to_real<T>(x.d()));
    }
}

// Jet-independent quantities of a setup in the working type.
template <class T>
struct Ctx {
    int n;
    T nn, S, Q, gamma, alpha, eps, p, q, M, N, P, Tm, U;
    T L, Lg, Lq, tau;
    Rational alpha_r, gamma_r, p_r, q_r;
    bool m_zero;
    CoefficientSet<T> c;
    KSet<T> K;
};

template <class T>
Ctx<T> make_ctx(const LabSetup& s) {
    Ctx<T> x;
    x.n = s.prob.n;
    x.nn = to_real<T>(Rational(s.prob.n));
    x.S = quad_value<T>(s.S);
    x.Q = (T(1) - x.S) / (x.nn - T(1));
    x.gamma = to_real<T>(s.gamma);
    x.alpha = to_real<T>(s.alpha);
    x.eps = to_real<T>(s.eps);
    x.p = to_real<T>(s.prob.p);
    x.q = to_real<T>(s.prob.q);
    x.M = to_real<T>(s.prob.M);
    x.N = to_real<T>(s.prob.N);
    x.P = to_real<T>(s.P);
    x.Tm = to_real<T>(s.T);
    x.U = to_real<T>(s.U);
    x.alpha_r = s.alpha;
    x.gamma_r = s.gamma;
    x.p_r = s.prob.p;
    x.q_r = s.prob.q;
    x.m_zero = s.prob.M.is_zero();
    x.c = coefficients_generic<T>(x.nn, x.p, x.q, x.gamma, x.S, x.Q, x.alpha, x.eps);
    x.K = k_set_generic<T>(x.c, x.P, x.Tm, x.U, x.p, x.q, x.gamma, x.S, x.alpha);
    x.L = x.c.L;
    x.Lg = T(1) + x.gamma * x.S;
    x.Lq = T(1) + x.gamma * x.S + x.q * x.S;
    x.tau = x.c.tau;
    return x;
}

// Jet-dependent building blocks.
template <class T>
struct Blocks {
    T lap, h11, G11;
    T sum_all;    // sum over all i, j of G_ij^2
    T rows;       // i >= 2, all j
    T row1_off;   // j >= 2 in row 1
    T col1_off;   // i >= 2 in column 1
    T sumE2;
    T w, vg;      // v^alpha g^gamma and v^gamma g^gamma
    T vp, gq;
    T z_a4, z_g2, z_gq2, z_2q, z_p, z_pq, z_2p, z_p1g2;
};

template <class T>
Blocks<T> blocks(const Jet3<T>& j, const Ctx<T>& x) {
    Blocks<T> b;
    const int n = j.n;
    b.lap = j.laplacian();
    b.h11 = j.h(0, 0);
    b.G11 = b.h11 - x.S * b.lap;
    b.sum_all = b.rows = b.row1_off = b.col1_off = b.sumE2 = T(0);
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
            T G = j.h(a, c), E = j.h(a, c);
            if (a == c) {
                G -= (a == 0 ? x.S : x.Q) * b.lap;
                E -= b.lap / x.nn;
            }
            T G2 = G * G;
            b.sum_all += G2;
            b.sumE2 += E * E;
            if (a >= 1) b.rows += G2;
            if (a == 0 && c >= 1) b.row1_off += G2;
            if (c == 0 && a >= 1) b.col1_off += G2;
        }
    const T& v = j.v;
    const T& g = j.g;
    T gg = power(g, x.gamma_r);
    b.w = power(v, x.alpha_r) * gg;
    b.vg = power(v, x.gamma_r) * gg;
    b.vp = power(v, x.p_r);
    b.gq = x.m_zero ? T(0) : power(g, x.q_r);
    b.z_a4 = b.w * g * g * g * g / (v * v);
    b.z_g2 = b.w * g * g / v;
    b.z_gq2 = b.z_g2 * b.gq;
    b.z_2q = b.w * b.gq * b.gq;
    b.z_p = b.w * b.vp;
    b.z_pq = b.z_p * b.gq;
    b.z_2p = b.z_p * b.vp;
    b.z_p1g2 = b.z_g2 * b.vp;
    return b;
}

template <class T>
T aggregate_w(const Ctx<T>& x, const DivergenceBundle<T>& d) {
    T inner = (T(1) - T(1) / x.nn) * d.A - d.DE + x.alpha * (x.S - T(1)) / x.L * d.D1;
    T mq = x.m_zero ? T(0) : x.q * x.M / (x.gamma + x.q) * d.Dq;
    return -d.A + (x.alpha + x.p) / x.L * d.D1 - mq + x.c.Lambda * inner;
}

// Right-hand side of the master identity without -W, split into signed terms.
template <class T>
std::vector<T> master_rest(const Ctx<T>& x, const Blocks<T>& b, const ResidualOptions& o) {
    const auto& c = x.c;
    std::vector<T> t;
    t.push_back(x.eps * b.w * b.sumE2);
    if (o.split == SplitReading::Rows) {
        t.push_back(c.a1 * b.w * b.rows);
        T g11sq = (o.base == BaseReading::VAlpha ? b.w : b.vg) * b.G11 * b.G11;
        t.push_back(c.a2 * (g11sq + b.w * b.row1_off));
    } else {
        t.push_back(c.a1 * b.w * (b.sum_all - b.G11 * b.G11));
        T g11sq = (o.base == BaseReading::VAlpha ? b.w : b.vg) * b.G11 * b.G11;
        t.push_back(c.a2 * (g11sq + b.w * b.row1_off));
    }
    t.push_back(c.a3 * b.z_a4);
    t.push_back(c.b1 * b.z_g2 * b.G11);
    t.push_back(c.b2 * b.w * b.G11 * b.lap);
    t.push_back(c.c2 * x.M * x.M * b.z_2q);
    t.push_back(-c.b3 * x.N * b.z_p1g2);
    t.push_back(-c.b4 * x.M * b.z_gq2);
    t.push_back(c.b5 * x.M * x.N * b.z_pq);
    return t;
}

template <class T>
T sum_of(const std::vector<T>& v) {
    T s(0);
    for (const auto& x : v) s += x;
    return s;
}

template <class T>
Residual<T> make_residual(const T& lhs, const T& rhs) {
    Residual<T> r{lhs, rhs, T(0)};
    r.residual = abs_of(T(lhs - rhs)) / (T(1) + abs_of(lhs) + abs_of(rhs));
    return r;
}

template <class T>
Residual<T> eval(IdentityId id, const Jet3<T>& j, const Ctx<T>& x, const ResidualOptions& o,
                 const DivergenceBundle<T>* given) {
    if (j.n != x.n) throw DomainError("jet dimension does not match the setup");
    Blocks<T> b = blocks(j, x);
    DivergenceBundle<T> d = given ? *given : divergences(j, x.alpha_r, x.gamma_r, x.p_r, x.q_r, b.gq);
    const auto& c = x.c;
    const T& S = x.S;
    const T& Q = x.Q;
    const T& al = x.alpha;
    const T& ga = x.gamma;
    const T& M = x.M;
    const T& N = x.N;
    const T one(1);
    T qg = x.m_zero ? T(0) : x.q / (ga + x.q);

    switch (id) {
    case IdentityId::LaplacianWeight: {
        T lhs = b.z_g2 * b.lap;
        T rhs = (d.D1 - (al - one) * b.z_a4 - (ga + T(2)) * b.z_g2 * b.G11) / x.L;
        return make_residual(lhs, rhs);
    }
    case IdentityId::SquareExpansion: {
        T lhs = c.D * b.w * b.lap * b.lap;
        T base = o.base == BaseReading::VAlpha ? b.w : b.vg;
        T rhs = (one - one / x.nn) * d.A - d.DE + al * (S - one) / x.L * d.D1 + b.w * (b.sum_all - b.G11 * b.G11) +
                al * (al - one) * (one - S) / x.L * b.z_a4 + al * (ga + T(3)) / x.L * b.z_g2 * b.G11 +
                (T(2) * ga * S - ga + T(2) * S - T(2) * Q) * b.w * b.G11 * b.lap +
                (one + ga) * base * b.G11 * b.G11 + ga * b.w * b.col1_off;
        return make_residual(lhs, rhs);
    }
    case IdentityId::TracelessSum: {
        T lhs = b.sumE2;
        T rhs = b.sum_all + T(2) * (S - Q) * b.G11 * b.lap + x.tau * b.lap * b.lap;
        return make_residual(lhs, rhs);
    }
    case IdentityId::EquationSquare: {
        T lhs = -(one + ga * S) * b.w * b.lap * b.lap;
        T ap = al + x.p;
        T rhs = -d.A + ap / x.L * d.D1 - qg * M * d.Dq + ga * b.w * b.G11 * b.lap -
                ap * (ga + T(2)) / x.L * b.z_g2 * b.G11 - ap * (al - one) / x.L * b.z_a4 - qg * M * M * b.z_2q +
                (x.p + qg * al) * M * b.z_gq2 - qg * M * N * b.z_pq;
        return make_residual(lhs, rhs);
    }
    case IdentityId::Master: {
        T lhs = -aggregate_w(x, d);
        return make_residual(lhs, sum_of(master_rest(x, b, o)));
    }
    case IdentityId::MultipliedN: {
        T lhs = N * N * b.z_2p + M * N * b.z_pq;
        T rhs = -N / x.Lg * d.Dp + (al + x.p) / x.Lg * N * b.z_p1g2 + ga / x.Lg * N * b.z_p * b.G11;
        return make_residual(lhs, rhs);
    }
    case IdentityId::MultipliedM: {
        T lhs = M * N * b.z_pq + M * M * b.z_2q;
        T rhs = -M / x.Lq * d.Dq + al / x.Lq * M * b.z_gq2 + (ga + x.q) / x.Lq * M * b.w * b.gq * b.G11;
        return make_residual(lhs, rhs);
    }
    case IdentityId::MultipliedGradient: {
        T lhs = -M * b.z_gq2;
        T rhs = d.D1 / x.L - (al - one) / x.L * b.z_a4 - (ga + T(2)) / x.L * b.z_g2 * b.G11 + N * b.z_p1g2;
        return make_residual(lhs, rhs);
    }
    case IdentityId::KDecomposition: {
        T W = aggregate_w(x, d) + x.Tm * N / x.Lg * d.Dp + x.U * M / x.Lq * d.Dq - x.P / x.L * d.D1;
        T beta1 = c.b1 + x.P * (ga + T(2)) / x.L;
        T beta = beta1 * j.g * j.g / j.v - x.Tm * ga / x.Lg * N * b.vp - x.U * (ga + x.q) / x.Lq * M * b.gq;
        T sq = b.G11 + beta / (T(2) * c.B0);
        const auto& K = x.K;
        T rhs = x.eps * b.w * b.sumE2 + c.a1 * b.w * (b.rows - b.G11 * b.G11 / (x.nn - one)) +
                c.a2 * b.w * b.row1_off + c.B0 * b.w * sq * sq + c.b2 * b.w * b.G11 * b.lap + K.K1 * b.z_a4 +
                K.K2 * N * N * b.z_2p + K.K3 * M * M * b.z_2q + K.K4 * N * b.z_p1g2 + K.K5 * M * b.z_gq2 +
                K.K6 * M * N * b.z_pq;
        return make_residual(T(-W), rhs);
    }
    }
    throw DomainError("unknown identity");
}

} // namespace

template <class T>
Residual<T> evaluate_identity(IdentityId id, const Jet3<T>& jet, const LabSetup& setup, const ResidualOptions& opt,
                              const std::optional<DivergenceBundle<T>>& bundle) {
    return eval(id, jet, make_ctx<T>(setup), opt, bundle ? &*bundle : nullptr);
}

template <class T>
InvariantValues<T> invariants(const Jet3<T>& j, const LabSetup& setup) {
    Ctx<T> x = make_ctx<T>(setup);
    T lap = j.laplacian();
    InvariantValues<T> r{T(0), T(0), T(0)};
    T diag2(0);
    T G11 = j.h(0, 0) - x.S * lap;
    r.trace_G = G11;
    for (int i = 0; i < j.n; ++i) {
        r.trace_E += j.h(i, i) - lap / x.nn;
        if (i > 0) {
            T Gii = j.h(i, i) - x.Q * lap;
            r.trace_G += Gii;
            diag2 += Gii * Gii;
        }
    }
    r.cauchy_schwarz_gap = (x.nn - T(1)) * diag2 - G11 * G11;
    return r;
}

template <class T>
std::vector<T> master_terms(const Jet3<T>& j, const LabSetup& setup) {
    Ctx<T> x = make_ctx<T>(setup);
    Blocks<T> b = blocks(j, x);
    auto d = divergences(j, x.alpha_r, x.gamma_r, x.p_r, x.q_r, b.gq);
    std::vector<T> t{T(-aggregate_w(x, d))};
    auto rest = master_rest(x, b, ResidualOptions{});
    for (auto& r : rest) t.push_back(-r);   // all on one side: sum is zero
    return t;
}

namespace {

struct Partial {
    std::map<std::pair<int, int>, std::map<int, std::pair<long, double>>> stats;   // (n, frame) -> id -> (count, max)
    long invariant_failures = 0;
    double worst_trace = 0, worst_cs = 0;
    double valpha = 0, vgamma = 0, rows = 0, literal = 0;
    double neg_min = INFINITY, neg_max = 0;

    void merge(const Partial& o) {
        for (const auto& [key, m] : o.stats)
            for (const auto& [id, cm] : m) {
                auto& mine = stats[key][id];
                mine.first += cm.first;
                mine.second = std::max(mine.second, cm.second);
            }
        invariant_failures += o.invariant_failures;
        worst_trace = std::max(worst_trace, o.worst_trace);
        worst_cs = std::min(worst_cs, o.worst_cs);
        valpha = std::max(valpha, o.valpha);
        vgamma = std::max(vgamma, o.vgamma);
        rows = std::max(rows, o.rows);
        literal = std::max(literal, o.literal);
        neg_min = std::min(neg_min, o.neg_min);
        neg_max = std::max(neg_max, o.neg_max);
    }
};

struct Task {
    int n;
    FrameKind frame;
    long first, count;   // trial indices
};

template <class T>
Partial run_task(const Task& task, const LabConfig& cfg, double tol) {
    Partial out;
    LabSetup setup = cfg.precision == LabPrecision::Exact ? exact_setup(task.n, task.frame)
                                                          : default_setup(task.n, task.frame);
    Ctx<T> x = make_ctx<T>(setup);
    auto key = std::make_pair(task.n, static_cast<int>(task.frame));
    auto& st = out.stats[key];
    const DivergenceBundle<T>* none = nullptr;
    ResidualOptions base{};
    ResidualOptions vgamma{BaseReading::VGamma, SplitReading::Rows};
    ResidualOptions literal{BaseReading::VAlpha, SplitReading::Literal};
    std::uint64_t stream = cfg.seed ^ (static_cast<std::uint64_t>(task.n) << 32) ^
                           (static_cast<std::uint64_t>(task.frame) << 48);
    for (long t = task.first; t < task.first + task.count; ++t) {
        std::uint64_t s = trial_seed(stream, static_cast<std::uint64_t>(t));
        Jet3<T> pde = sample_jet<T>(s, task.n, JetMode::Pde, setup.prob);
        for (IdentityId id : kAllIdentities) {
            double r = to_double_of(eval(id, pde, x, base, none).residual);
            auto& cm = st[static_cast<int>(id)];
            cm.first += 1;
            cm.second = std::max(cm.second, r);
        }
        // Free-jet identities also on unconstrained jets.
        Jet3<T> free = sample_jet<T>(s ^ 0x5bd1e995ULL, task.n, JetMode::Free, setup.prob);
        for (IdentityId id : kAllIdentities) {
            if (identity_needs_pde(id)) continue;
            double r = to_double_of(eval(id, free, x, base, none).residual);
            auto& cm = st[static_cast<int>(id)];
            cm.first += 1;
            cm.second = std::max(cm.second, r);
        }
        double neg = to_double_of(eval(IdentityId::Master, free, x, base, none).residual);
        out.neg_min = std::min(out.neg_min, neg);
        out.neg_max = std::max(out.neg_max, neg);

        out.valpha = std::max(out.valpha, to_double_of(eval(IdentityId::Master, pde, x, base, none).residual));
        out.vgamma = std::max(out.vgamma, to_double_of(eval(IdentityId::Master, pde, x, vgamma, none).residual));
        out.rows = out.valpha;
        out.literal =
            std::max(out.literal, to_double_of(eval(IdentityId::Master, pde, x, literal, none).residual));

        for (const Jet3<T>* jp : {&pde, &free}) {
            auto inv = invariants(*jp, setup);
            double tr = std::max(std::fabs(to_double_of(inv.trace_E)), std::fabs(to_double_of(inv.trace_G)));
            double cs = to_double_of(inv.cauchy_schwarz_gap);
            out.worst_trace = std::max(out.worst_trace, tr);
            out.worst_cs = std::min(out.worst_cs, cs);
            if (tr > std::max(tol, 0.0) * 10 || cs < -std::max(tol, 0.0)) ++out.invariant_failures;
        }
    }
    return out;
}

Partial run_any(const Task& t, const LabConfig& cfg, double tol) {
    switch (cfg.precision) {
    case LabPrecision::Double: return run_task<double>(t, cfg, tol);
    case LabPrecision::Extended: return run_task<Extended>(t, cfg, tol);
    case LabPrecision::Exact: return run_task<Rational>(t, cfg, tol);
    }
    return {};
}

} // namespace

LabResult run_identity_lab(const LabConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    LabResult res;
    res.config = cfg;
    res.tolerance = lab_tolerance(cfg.precision);
    if (cfg.dims.empty() || cfg.frames.empty() || cfg.trials <= 0) throw DomainError("empty identity-lab run");

    // Split trials evenly over (n, frame) cells; the first cells take the remainder.
    std::vector<Task> tasks;
    long cells = static_cast<long>(cfg.dims.size() * cfg.frames.size());
    long idx = 0;
    for (int n : cfg.dims)
        for (FrameKind f : cfg.frames) {
            long cnt = cfg.trials / cells + (idx < cfg.trials % cells ? 1 : 0);
            ++idx;
            if (cnt > 0) tasks.push_back({n, f, 0, cnt});
        }

    Partial all;
    int threads = std::max(1, cfg.threads);
    if (threads == 1) {
        for (const auto& t : tasks) all.merge(run_any(t, cfg, res.tolerance));
    } else {
        // Trials are independent; chunk each cell so the pool stays busy.
        std::vector<Task> chunks;
        for (const auto& t : tasks) {
            long step = std::max(1L, t.count / threads);
            for (long f = 0; f < t.count; f += step) chunks.push_back({t.n, t.frame, f, std::min(step, t.count - f)});
        }
        for (size_t i = 0; i < chunks.size(); i += threads) {
            std::vector<std::future<Partial>> futs;
            for (size_t k = i; k < std::min(chunks.size(), i + threads); ++k)
                futs.push_back(std::async(std::launch::async, run_any, chunks[k], cfg, res.tolerance));
            for (auto& f : futs) all.merge(f.get());
        }
    }

    res.identities_pass = true;
    for (const auto& [key, m] : all.stats)
        for (const auto& [id, cm] : m) {
            IdentityStat s;
            s.id = static_cast<IdentityId>(id);
            s.n = key.first;
            s.frame = static_cast<FrameKind>(key.second);
            s.count = cm.first;
            s.max_residual = cm.second;
            s.pass = cfg.precision == LabPrecision::Exact ? cm.second == 0 : cm.second < res.tolerance;
            res.identities_pass = res.identities_pass && s.pass;
            res.stats.push_back(s);
        }
    res.invariant_failures = all.invariant_failures;
    res.worst_trace = all.worst_trace;
    res.worst_cauchy_schwarz = all.worst_cs;
    res.valpha_max = all.valpha;
    res.vgamma_max = all.vgamma;
    res.rows_max = all.rows;
    res.literal_max = all.literal;
    double tol = cfg.precision == LabPrecision::Exact ? 0 : res.tolerance;
    auto ok = [&](double r) { return cfg.precision == LabPrecision::Exact ? r == 0 : r < tol; };
    auto pick = [&](double a, double b, const char* na, const char* nb) -> std::string {
        if (ok(a) && !ok(b)) return na;
        if (ok(b) && !ok(a)) return nb;
        return "ambiguous";
    };
    res.base_reading = pick(all.valpha, all.vgamma, "v^alpha", "v^gamma");
    res.split_reading = pick(all.rows, all.literal, "rows", "literal");
    res.negative_min = all.neg_min;
    res.negative_max = all.neg_max;
    res.negative_control_fails = all.neg_min > std::max(tol, 1e-9) && all.neg_max > 1e-3;

    // Scaling coherence on the double path, a fixed set of cells.
    res.scaling_signs_preserved = true;
    for (int n : cfg.dims)
        for (FrameKind f : cfg.frames)
            for (double k : {0.5, 2.0, 5.0}) {
                auto sc = scaling_check(n, f, k, cfg.seed);
                res.scaling_max_deviation = std::max(res.scaling_max_deviation, sc.max_deviation);
                res.scaling_signs_preserved = res.scaling_signs_preserved && sc.signs_preserved;
            }

    res.pass = res.identities_pass && res.invariant_failures == 0 && res.base_reading == "v^alpha" &&
               res.split_reading == "rows" && res.negative_control_fails && res.scaling_max_deviation < 1e-9 &&
               res.scaling_signs_preserved;
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

ScalingResult scaling_check(int n, FrameKind kind, double k, std::uint64_t seed, const Rational& q_shift) {
    using T = long double;
    LabSetup s = default_setup(n, kind);
    s.prob.q += q_shift;
    Rational a = Rational(2) / (s.prob.p - Rational(1));
    auto jet = sample_jet<T>(trial_seed(seed, 0xabcdef), n, JetMode::Pde, s.prob);
    auto scaled = rescale_jet<T>(jet, static_cast<T>(k), a);
    auto t0 = master_terms(jet, s);
    auto t1 = master_terms(scaled, s);
    ScalingResult r;
    r.k = k;
    T ar = to_real<T>(a);
    T E = to_real<T>(s.alpha) * ar + to_real<T>(s.gamma) * (ar + 1) + 2 * (ar + 2);
    r.exponent = static_cast<double>(E);
    T kE = std::pow(static_cast<T>(k), E);
    T scale = 0;
    for (const auto& t : t0) scale += std::fabs(t);
    r.signs_preserved = true;
    for (size_t i = 0; i < t0.size(); ++i) {
        T dev = std::fabs(t1[i] / kE - t0[i]) / scale;
        r.max_deviation = std::max(r.max_deviation, static_cast<double>(dev));
        if (std::fabs(t0[i]) > 1e-12L * scale && (t0[i] > 0) != (t1[i] > 0)) r.signs_preserved = false;
    }
    return r;
}

#define LV_ID_INSTANTIATE(T)                                                                                       \
    template Residual<T> evaluate_identity<T>(IdentityId, const Jet3<T>&, const LabSetup&, const ResidualOptions&, \
                                              const std::optional<DivergenceBundle<T>>&);                          \
    template InvariantValues<T> invariants<T>(const Jet3<T>&, const LabSetup&);                                    \
    template std::vector<T> master_terms<T>(const Jet3<T>&, const LabSetup&);

LV_ID_INSTANTIATE(double)
LV_ID_INSTANTIATE(long double)
LV_ID_INSTANTIATE(Extended)
LV_ID_INSTANTIATE(Rational)

} // namespace lv
