#pragma once

#include "liouville/identities.hpp"
#include "liouville/interval.hpp"
#include "liouville/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lv {

inline constexpr const char* kVersion = "1.0.0";

// Overall result of a command; maps to exit codes 0, 1, 2.
enum class Outcome { Pass = 0, Violated = 1, Inconclusive = 2 };

struct Report {
    std::string command;
    Outcome outcome = Outcome::Inconclusive;
    std::string json, csv, text;
};

struct RunOptions {
    unsigned precision = kDefaultPrecision;
    std::uint64_t seed = 1;
    int threads = 1;
};

Report claims_report(int n_max, const RunOptions& opt);

struct ThresholdArgs {
    int n_lo = 7, n_hi = 7;
    std::optional<Rational> p;   // default: critical p
    int p_points = 1;            // > 1: M2 < M1 over [crit - 1/n^2, crit]
};
Report thresholds_report(const ThresholdArgs& args, const RunOptions& opt);

struct IdentityArgs {
    long trials = 1000;
    LabPrecision precision = LabPrecision::Double;
    std::vector<int> dims{3, 5, 7, 10};
};
Report identities_report(const IdentityArgs& args, const RunOptions& opt);

struct YoungArgs {
    int n_lo = 3, n_hi = 50, p_points = 20;
};
Report young_report(const YoungArgs& args, const RunOptions& opt);

struct ShootArgs {
    int n = 5;
    Rational p{2};
    std::optional<Rational> q;   // default: critical q
    double M = 1, a = 1, r_max = 1000, tol = 1e-10;
};
Report shoot_report(const ShootArgs& args, const RunOptions& opt);

struct SweepArgs {
    int n = 5;
    Rational p{2};
    double M = 1;
    double h_lo = 0.1, h_hi = 10;
    int count = 10;
    double r_max = 1000;
};
Report sweep_report(const SweepArgs& args, const RunOptions& opt);

// Every section with its default arguments, in one document.
Report full_report(const RunOptions& opt);

// [lo, hi] as outward-rounded decimal strings.
std::vector<std::string> enclosure_strings(const RatInterval& x, int digits = 20);

} // namespace lv
