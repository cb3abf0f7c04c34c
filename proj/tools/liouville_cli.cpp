#include "liouville/liouville.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kUsage = 64;

struct Opts {
    std::string format = "json";
    std::string output;
    unsigned precision = 128;
    uint64_t seed = 1;
    int threads = 1;
    std::string config;

    int n_max = 500;
    int n = 0, n_lo = 0, n_hi = 0, p_points = 0;
    std::string p, q;
    long trials = 1000;
    std::string lab = "double";
    std::vector<int> dims{3, 5, 7, 10};
    double M = 1, a = 1, r_max = 1000, tol = 1e-10;
    double h_lo = 0.1, h_hi = 10;
    int count = 10;
};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

// Flat "key = value" lines; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot read " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--config", path + ":" + std::to_string(no) + ": expected key = value");
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

bool flag_given(const std::vector<std::string>& args, const std::string& key) {
    std::string f = "--" + key;
    for (const auto& a : args)
        if (a == f || a.rfind(f + "=", 0) == 0) return true;
    return false;
}

// Appends config entries that the command line does not already set.
std::vector<std::string> merge_config(std::vector<std::string> args) {
    std::optional<std::string> path;
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    }
    if (!path) return args;
    for (const auto& [k, v] : read_config(*path)) {
        if (k == "config" || flag_given(args, k)) continue;
        args.push_back("--" + k);
        args.push_back(v);
    }
    return args;
}

int emit(lv_report* rep, const Opts& o) {
    std::unique_ptr<lv_report, decltype(&lv_report_free)> guard(rep, lv_report_free);
    const char* body = o.format == "csv" ? lv_report_csv(rep) : o.format == "text" ? lv_report_text(rep)
                                                                                   : lv_report_json(rep);
    if (o.output.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(o.output, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << o.output << "\n";
            return kUsage;
        }
        f << body;
    }
    return static_cast<int>(lv_report_outcome(rep));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certification and exploration toolkit for Delta v + N v^p + M |grad v|^q = 0"};
    app.fallthrough();
    app.require_subcommand(1);
    Opts o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--output,-o", o.output, "Write the report to this file");
    app.add_option("--precision", o.precision, "Working precision in bits")
        ->envname("LIOUVILLE_PRECISION")
        ->check(CLI::Range(32u, 65536u));
    app.add_option("--seed", o.seed, "Seed for randomized checks");
    app.add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1, 1024));
    app.add_option("--config", o.config, "Flat key = value file mirroring the flags; flags win");
    app.set_version_flag("--version", lv_version());

    auto* claims = app.add_subcommand("claims", "Verify the ten auxiliary claims");
    claims->add_option("--n-max", o.n_max, "Largest n for the per-n checks")->check(CLI::Range(7, 100000));

    auto* thr = app.add_subcommand("thresholds", "Threshold constants and the M2 < M1 comparison");
    thr->add_option("--n", o.n, "Single dimension");
    thr->add_option("--n-lo", o.n_lo, "First dimension");
    thr->add_option("--n-hi", o.n_hi, "Last dimension");
    thr->add_option("--p", o.p, "Exponent p as a/b or decimal (default: critical)");
    thr->add_option("--p-points", o.p_points, "Grid points over [crit - 1/n^2, crit]")->check(CLI::PositiveNumber);

    auto* ids = app.add_subcommand("identities", "Pointwise identity suite on random jets");
    ids->add_option("--trials", o.trials, "Number of jets")->check(CLI::PositiveNumber);
    ids->add_option("--lab-precision", o.lab, "Scalar type")->check(CLI::IsMember({"double", "extended", "exact"}));
    ids->add_option("--dims", o.dims, "Dimensions")->delimiter(',');

    auto* young = app.add_subcommand("young", "Young exponent feasibility scan");
    young->add_option("--n-lo", o.n_lo, "First dimension");
    young->add_option("--n-hi", o.n_hi, "Last dimension");
    young->add_option("--p-points", o.p_points, "Points in (1, crit]")->check(CLI::PositiveNumber);

    auto* shoot = app.add_subcommand("shoot", "Integrate one radial solution");
    shoot->add_option("--n", o.n, "Dimension");
    shoot->add_option("--p", o.p, "Exponent p");
    shoot->add_option("--q", o.q, "Gradient exponent (default: 2p/(p+1))");
    shoot->add_option("--M", o.M, "Gradient coefficient");
    shoot->add_option("--a", o.a, "Initial height v(0)");
    shoot->add_option("--r-max", o.r_max, "Outer radius");
    shoot->add_option("--tol", o.tol, "Integration tolerance");

    auto* sweep = app.add_subcommand("sweep", "Classify radial solutions over initial heights");
    sweep->add_option("--n", o.n, "Dimension");
    sweep->add_option("--p", o.p, "Exponent p");
    sweep->add_option("--M", o.M, "Gradient coefficient");
    sweep->add_option("--h-lo", o.h_lo, "Smallest height");
    sweep->add_option("--h-hi", o.h_hi, "Largest height");
    sweep->add_option("--count", o.count, "Number of heights")->check(CLI::PositiveNumber);
    sweep->add_option("--r-max", o.r_max, "Outer radius");

    auto* report = app.add_subcommand("report", "Every section in one document");

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        args = merge_config(std::move(args));
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    std::unique_ptr<lv_context, decltype(&lv_context_free)> ctx(lv_context_new(), lv_context_free);
    if (!ctx || lv_set_precision(ctx.get(), o.precision) != LV_OK || lv_set_seed(ctx.get(), o.seed) != LV_OK ||
        lv_set_threads(ctx.get(), o.threads) != LV_OK) {
        std::cerr << "error: " << (ctx ? lv_last_error(ctx.get()) : "out of memory") << "\n";
        return kUsage;
    }

    lv_report* rep = nullptr;
    lv_status st = LV_OK;
    const char* p = o.p.empty() ? nullptr : o.p.c_str();
    if (*claims) {
        st = lv_claims(ctx.get(), o.n_max, &rep);
    } else if (*thr) {
        int lo = o.n ? o.n : (o.n_lo ? o.n_lo : 7);
        int hi = o.n ? o.n : (o.n_hi ? o.n_hi : lo);
        st = lv_thresholds(ctx.get(), lo, hi, p, o.p_points ? o.p_points : 1, &rep);
    } else if (*ids) {
        lv_lab_precision lp = o.lab == "extended" ? LV_LAB_EXTENDED : o.lab == "exact" ? LV_LAB_EXACT : LV_LAB_DOUBLE;
        st = lv_identities(ctx.get(), o.trials, lp, o.dims.data(), static_cast<int>(o.dims.size()), &rep);
    } else if (*young) {
        st = lv_young(ctx.get(), o.n_lo ? o.n_lo : 3, o.n_hi ? o.n_hi : 50, o.p_points ? o.p_points : 20, &rep);
    } else if (*shoot) {
        st = lv_shoot(ctx.get(), o.n ? o.n : 5, p ? p : "2", o.q.empty() ? nullptr : o.q.c_str(), o.M, o.a, o.r_max,
                      o.tol, &rep);
    } else if (*sweep) {
        st = lv_sweep(ctx.get(), o.n ? o.n : 5, p ? p : "2", o.M, o.h_lo, o.h_hi, o.count, o.r_max, &rep);
    } else if (*report) {
        st = lv_full_report(ctx.get(), &rep);
    }
    if (st != LV_OK) {
        std::cerr << "error: " << lv_last_error(ctx.get()) << "\n";
        return st == LV_ERR_INTERNAL ? static_cast<int>(LV_INCONCLUSIVE) : kUsage;
    }
    return emit(rep, o);
}
