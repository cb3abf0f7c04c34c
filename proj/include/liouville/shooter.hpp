#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace lv {

enum class ShotClass { Crossed, Decayed, Inconclusive };
const char* shot_class_name(ShotClass c);

// Radial problem v'' + (n-1) v'/r + N |v|^p + M |v'|^q = 0, v(0) = a, v'(0) = 0.
struct ShotConfig {
    int n = 3;
    double p = 2, q = 4.0 / 3, M = 0, N = 1;
    double a = 1;
    double r_max = 1000;
    double tol = 1e-10;     // absolute and relative integration tolerance
    double v_min = 1e-6;    // below this at r_max (with |v'| < 1e-8) the shot has decayed
    // Extra radii where the dense solution is sampled exactly (sorted, inside (r0, r_max]).
    std::vector<double> grid;

    // q from the critical relation 2p/(p+1).
    static ShotConfig critical(int n, double p, double M, double a);
    bool q_is_critical() const;
    // Throws DomainError on a <= 0, r_max <= r0, p <= 1, q <= 1, n < 1 or tol <= 0.
    void validate() const;
};

inline constexpr double kShotStart = 1e-6;
inline constexpr double kCrossingTol = 1e-10;

struct ShotSample {
    double r, v, dv;
};

struct Trajectory {
    std::vector<ShotSample> samples;        // one per accepted step, strictly increasing r
    std::vector<ShotSample> grid_samples;   // at cfg.grid radii reached before the event
    ShotClass cls = ShotClass::Inconclusive;
    double r_cross = 0;   // crossing radius, polished to kCrossingTol
    double limit = 0;     // v at r_max when decayed
    bool monotone = true;   // v' <= 0 wherever v > 0
    long steps = 0;
    std::string diagnostics;
};

Trajectory shoot(const ShotConfig& cfg);

struct ScalingCheck {
    double k = 1;
    double height = 0;     // k^(2/(p-1)) a
    double residual = 0;   // sup |v_k(r) - k^(2/(p-1)) v(k r)| / sup |v_k|
    std::size_t points = 0;
};

// Shoots from the rescaled height and compares with the rescaled original on a common grid.
ScalingCheck scaling_check(const ShotConfig& cfg, double k);

struct SweepRow {
    double height = 0;
    ShotClass cls = ShotClass::Inconclusive;
    double r_cross = 0;
};

struct SweepResult {
    int n = 0;
    double p = 0, q = 0, M = 0;
    std::vector<SweepRow> rows;
    bool uniform = false;       // every height in the same class
    bool all_crossed = false;
    double seconds = 0;
};

SweepResult sweep(int n, double p, double M, const std::vector<double>& heights, double r_max = 1000,
                  int threads = 1);

// `count` heights spaced geometrically over [lo, hi].
std::vector<double> log_heights(double lo, double hi, int count);

} // namespace lv
