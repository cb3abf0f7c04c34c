#include "liouville/shooter.hpp"

#include "liouville/coefficients.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <future>
#include <sstream>

namespace lv {

namespace odeint = boost::numeric::odeint;

const char* shot_class_name(ShotClass c) {
    switch (c) {
    case ShotClass::Crossed: return "crossed";
    case ShotClass::Decayed: return "decayed";
    case ShotClass::Inconclusive: return "inconclusive";
    }
    return "?";
}

ShotConfig ShotConfig::critical(int n, double p, double M, double a) {
    ShotConfig c;
    c.n = n;
    c.p = p;
    c.q = 2 * p / (p + 1);
    c.M = M;
    c.a = a;
    return c;
}

bool ShotConfig::q_is_critical() const { return std::fabs(q - 2 * p / (p + 1)) < 1e-12; }

void ShotConfig::validate() const {
    if (n < 1) throw DomainError("shot: n must be positive");
    if (!(a > 0)) throw DomainError("shot: initial height must be positive");
    if (!(r_max > kShotStart)) throw DomainError("shot: r_max must exceed the start radius");
    if (!(p > 1)) throw DomainError("shot: p must exceed 1");
    if (!(q > 1)) throw DomainError("shot: q must exceed 1");
    if (!(tol > 0)) throw DomainError("shot: tolerance must be positive");
    if (!(N >= 0) || !(M >= 0)) throw DomainError("shot: M and N must be nonnegative");
}

namespace {

using State = std::array<double, 2>;

struct Rhs {
    const ShotConfig& c;
    void operator()(const State& y, State& dy, double r) const {
        dy[0] = y[1];
        dy[1] = -(c.n - 1) * y[1] / r - c.N * std::pow(std::fabs(y[0]), c.p) - c.M * std::pow(std::fabs(y[1]), c.q);
    }
};

} // namespace

Trajectory shoot(const ShotConfig& cfg) {
    cfg.validate();
    Trajectory tr;
    Rhs rhs{cfg};
    // Series start: v'' (0) = -N a^p / n.
    const double r0 = kShotStart;
    const double c2 = cfg.N * std::pow(cfg.a, cfg.p) / cfg.n;
    State y{cfg.a - 0.5 * c2 * r0 * r0, -c2 * r0};
    tr.samples.push_back({r0, y[0], y[1]});

    auto st = odeint::make_dense_output(cfg.tol, cfg.tol, odeint::runge_kutta_dopri5<State>());
    st.initialize(y, r0, 1e-3 * r0);
    size_t gi = 0;
    while (gi < cfg.grid.size() && cfg.grid[gi] <= r0) ++gi;
    const long max_steps = 2'000'000;
    State tmp;
    auto state_at = [&](double r) {
        st.calc_state(r, tmp);
        return tmp;
    };

    try {
        while (true) {
            if (tr.steps >= max_steps) {
                tr.diagnostics = "step limit reached";
                return tr;
            }
            auto [t0, t1] = st.do_step(rhs);
            ++tr.steps;
            if (!(t1 - t0 > 1e-15 * std::max(1.0, t1))) {
                std::ostringstream os;
                os << "step size underflow at r = " << t0;
                tr.diagnostics = os.str();
                return tr;
            }
            double t_end = std::min(t1, cfg.r_max);
            State cur = t1 <= cfg.r_max ? st.current_state() : state_at(t_end);
            if (!std::isfinite(cur[0]) || !std::isfinite(cur[1])) {
                tr.diagnostics = "non-finite state";
                return tr;
            }
            double r_event = t_end;
            bool crossed = cur[0] <= 0;
            if (crossed) {
                double lo = t0, hi = t_end;
                while (hi - lo > kCrossingTol) {
                    double mid = 0.5 * (lo + hi);
                    (state_at(mid)[0] > 0 ? lo : hi) = mid;
                }
                r_event = 0.5 * (lo + hi);
            }
            for (; gi < cfg.grid.size() && cfg.grid[gi] <= r_event; ++gi) {
                State s = state_at(cfg.grid[gi]);
                tr.grid_samples.push_back({cfg.grid[gi], s[0], s[1]});
            }
            if (crossed) {
                State s = state_at(r_event);
                tr.samples.push_back({r_event, s[0], s[1]});
                tr.cls = ShotClass::Crossed;
                tr.r_cross = r_event;
                return tr;
            }
            if (cur[1] > 0) tr.monotone = false;
            tr.samples.push_back({t_end, cur[0], cur[1]});
            if (t1 >= cfg.r_max) {
                if (cur[0] > 0 && std::fabs(cur[1]) < 1e-8 && cur[0] < cfg.v_min) {
                    tr.cls = ShotClass::Decayed;
                    tr.limit = cur[0];
                } else {
                    std::ostringstream os;
                    os << "reached r_max with v = " << cur[0] << ", v' = " << cur[1];
                    tr.diagnostics = os.str();
                }
                return tr;
            }
        }
    } catch (const std::exception& e) {
        tr.diagnostics = std::string("integrator failure: ") + e.what();
        tr.cls = ShotClass::Inconclusive;
    }
    return tr;
}

ScalingCheck scaling_check(const ShotConfig& cfg, double k) {
    if (!(k > 0)) throw DomainError("scaling: k must be positive");
    ScalingCheck out;
    out.k = k;
    const double e = 2 / (cfg.p - 1);
    ShotConfig base = cfg, scaled = cfg;
    base.grid.clear();
    scaled.grid.clear();
    scaled.a = std::pow(k, e) * cfg.a;
    out.height = scaled.a;

    // Common window: up to the first crossing of either solution, in scaled radii.
    auto t_base = shoot(base), t_scaled = shoot(scaled);
    double end_base = t_base.cls == ShotClass::Crossed ? t_base.r_cross : base.r_max;
    double end_scaled = t_scaled.cls == ShotClass::Crossed ? t_scaled.r_cross : scaled.r_max;
    double R = 0.999 * std::min(end_scaled, end_base / k);
    double r_lo = 1e-3 * R;
    const int points = 400;
    std::vector<double> g_scaled(points), g_base(points);
    for (int i = 0; i < points; ++i) {
        g_scaled[i] = r_lo + (R - r_lo) * i / (points - 1);
        g_base[i] = k * g_scaled[i];
    }
    base.grid = g_base;
    scaled.grid = g_scaled;
    auto a = shoot(base), b = shoot(scaled);
    size_t m = std::min(a.grid_samples.size(), b.grid_samples.size());
    double worst = 0, scale = 0;
    for (size_t i = 0; i < m; ++i) {
        double expect = std::pow(k, e) * a.grid_samples[i].v;
        worst = std::max(worst, std::fabs(b.grid_samples[i].v - expect));
        scale = std::max(scale, std::fabs(b.grid_samples[i].v));
    }
    out.points = m;
    out.residual = scale > 0 ? worst / scale : 0;
    return out;
}

SweepResult sweep(int n, double p, double M, const std::vector<double>& heights, double r_max, int threads) {
    auto t0 = std::chrono::steady_clock::now();
    if (heights.empty()) throw DomainError("sweep: no heights");
    for (double h : heights)
        if (!(h > 0) || !std::isfinite(h)) throw DomainError("sweep: heights must be finite and positive");
    SweepResult res;
    res.n = n;
    res.p = p;
    res.q = 2 * p / (p + 1);
    res.M = M;
    auto one = [=](double h) {
        ShotConfig c = ShotConfig::critical(n, p, M, h);
        c.r_max = r_max;
        auto t = shoot(c);
        return SweepRow{h, t.cls, t.r_cross};
    };
    res.rows.resize(heights.size());
    int th = std::max(1, threads);
    for (size_t i = 0; i < heights.size(); i += th) {
        std::vector<std::future<SweepRow>> futs;
        for (size_t k = i; k < std::min(heights.size(), i + th); ++k)
            futs.push_back(std::async(th > 1 ? std::launch::async : std::launch::deferred, one, heights[k]));
        for (size_t k = 0; k < futs.size(); ++k) res.rows[i + k] = futs[k].get();
    }
    res.uniform = std::all_of(res.rows.begin(), res.rows.end(),
                              [&](const SweepRow& r) { return r.cls == res.rows.front().cls; });
    res.all_crossed =
        std::all_of(res.rows.begin(), res.rows.end(), [](const SweepRow& r) { return r.cls == ShotClass::Crossed; });
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

std::vector<double> log_heights(double lo, double hi, int count) {
    if (!(lo > 0) || !(hi >= lo) || count < 1) throw DomainError("heights: need 0 < lo <= hi and count >= 1");
    std::vector<double> h(count);
    for (int i = 0; i < count; ++i)
        h[i] = count == 1 ? lo : lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1));
    return h;
}

} // namespace lv
