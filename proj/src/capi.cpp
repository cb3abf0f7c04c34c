#include "liouville/liouville.h"

#include "liouville/report.hpp"

#include <exception>
#include <new>
#include <string>

struct lv_context {
    lv::RunOptions opt;
    std::string error;
};

struct lv_report {
    lv::Report r;
};

namespace {

lv_status fail(lv_context* ctx, lv_status s, const std::string& msg) {
    if (ctx) ctx->error = msg;
    return s;
}

lv::Rational parse_rational(const char* s, const char* what) {
    try {
        return lv::Rational::parse(s);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("cannot parse ") + what + " '" + s + "'");
    }
}

// Runs `make` and hands the report out, translating exceptions into status codes.
template <class F>
lv_status run(lv_context* ctx, lv_report** out, F&& make) {
    if (!ctx) return LV_ERR_ARGUMENT;
    if (!out) return fail(ctx, LV_ERR_ARGUMENT, "output pointer is null");
    *out = nullptr;
    try {
        auto* rep = new lv_report{make()};
        *out = rep;
        ctx->error.clear();
        return LV_OK;
    } catch (const lv::DomainError& e) {
        return fail(ctx, LV_ERR_DOMAIN, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(ctx, LV_ERR_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(ctx, LV_ERR_INTERNAL, e.what());
    }
}

} // namespace

extern "C" {

const char* lv_version(void) { return lv::kVersion; }

lv_context* lv_context_new(void) { return new (std::nothrow) lv_context(); }

void lv_context_free(lv_context* ctx) { delete ctx; }

const char* lv_last_error(const lv_context* ctx) { return ctx ? ctx->error.c_str() : "null context"; }

lv_status lv_set_precision(lv_context* ctx, unsigned bits) {
    if (!ctx) return LV_ERR_ARGUMENT;
    if (bits < 32 || bits > 1u << 16) return fail(ctx, LV_ERR_ARGUMENT, "precision must be in [32, 65536] bits");
    ctx->opt.precision = bits;
    return LV_OK;
}

lv_status lv_set_seed(lv_context* ctx, uint64_t seed) {
    if (!ctx) return LV_ERR_ARGUMENT;
    ctx->opt.seed = seed;
    return LV_OK;
}

lv_status lv_set_threads(lv_context* ctx, int threads) {
    if (!ctx) return LV_ERR_ARGUMENT;
    if (threads < 1 || threads > 1024) return fail(ctx, LV_ERR_ARGUMENT, "threads must be in [1, 1024]");
    ctx->opt.threads = threads;
    return LV_OK;
}

lv_status lv_claims(lv_context* ctx, int n_max, lv_report** out) {
    return run(ctx, out, [&] {
        if (n_max < 7) throw std::invalid_argument("n_max must be at least 7");
        return lv::claims_report(n_max, ctx->opt);
    });
}

lv_status lv_thresholds(lv_context* ctx, int n_lo, int n_hi, const char* p, int p_points, lv_report** out) {
    return run(ctx, out, [&] {
        lv::ThresholdArgs a;
        a.n_lo = n_lo;
        a.n_hi = n_hi;
        if (p) a.p = parse_rational(p, "p");
        a.p_points = p_points;
        if (n_lo < 3 || n_hi < n_lo) throw std::invalid_argument("need 3 <= n_lo <= n_hi");
        if (p_points < 1) throw std::invalid_argument("p_points must be positive");
        return lv::thresholds_report(a, ctx->opt);
    });
}

lv_status lv_identities(lv_context* ctx, long trials, lv_lab_precision precision, const int* dims, int dim_count,
                        lv_report** out) {
    return run(ctx, out, [&] {
        lv::IdentityArgs a;
        if (trials < 1) throw std::invalid_argument("trials must be positive");
        a.trials = trials;
        switch (precision) {
        case LV_LAB_DOUBLE: a.precision = lv::LabPrecision::Double; break;
        case LV_LAB_EXTENDED: a.precision = lv::LabPrecision::Extended; break;
        case LV_LAB_EXACT: a.precision = lv::LabPrecision::Exact; break;
        default: throw std::invalid_argument("unknown lab precision");
        }
        if (dims && dim_count > 0) {
            a.dims.assign(dims, dims + dim_count);
            for (int n : a.dims)
                if (n < 3) throw std::invalid_argument("identity dimensions must be >= 3");
        }
        return lv::identities_report(a, ctx->opt);
    });
}

lv_status lv_young(lv_context* ctx, int n_lo, int n_hi, int p_points, lv_report** out) {
    return run(ctx, out, [&] {
        if (n_lo < 3 || n_hi < n_lo || p_points < 1) throw std::invalid_argument("need 3 <= n_lo <= n_hi, p_points >= 1");
        return lv::young_report({n_lo, n_hi, p_points}, ctx->opt);
    });
}

lv_status lv_shoot(lv_context* ctx, int n, const char* p, const char* q, double M, double a, double r_max, double tol,
                   lv_report** out) {
    return run(ctx, out, [&] {
        if (!p) throw std::invalid_argument("p is required");
        lv::ShootArgs s;
        s.n = n;
        s.p = parse_rational(p, "p");
        if (q) s.q = parse_rational(q, "q");
        s.M = M;
        s.a = a;
        s.r_max = r_max;
        s.tol = tol;
        return lv::shoot_report(s, ctx->opt);
    });
}

lv_status lv_sweep(lv_context* ctx, int n, const char* p, double M, double h_lo, double h_hi, int count, double r_max,
                   lv_report** out) {
    return run(ctx, out, [&] {
        if (!p) throw std::invalid_argument("p is required");
        if (count < 1) throw std::invalid_argument("count must be positive");
        lv::SweepArgs s;
        s.n = n;
        s.p = parse_rational(p, "p");
        s.M = M;
        s.h_lo = h_lo;
        s.h_hi = h_hi;
        s.count = count;
        s.r_max = r_max;
        return lv::sweep_report(s, ctx->opt);
    });
}

lv_status lv_full_report(lv_context* ctx, lv_report** out) {
    return run(ctx, out, [&] { return lv::full_report(ctx->opt); });
}

const char* lv_report_json(const lv_report* r) { return r ? r->r.json.c_str() : ""; }
const char* lv_report_csv(const lv_report* r) { return r ? r->r.csv.c_str() : ""; }
const char* lv_report_text(const lv_report* r) { return r ? r->r.text.c_str() : ""; }

lv_outcome lv_report_outcome(const lv_report* r) {
    return r ? static_cast<lv_outcome>(static_cast<int>(r->r.outcome)) : LV_INCONCLUSIVE;
}

void lv_report_free(lv_report* r) { delete r; }

} // extern "C"
