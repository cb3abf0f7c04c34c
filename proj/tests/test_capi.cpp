#include "liouville/liouville.h"

#include <doctest.h>
#include <json.hpp>

#include <memory>
#include <string>

namespace {

using Ctx = std::unique_ptr<lv_context, decltype(&lv_context_free)>;
using Rep = std::unique_ptr<lv_report, decltype(&lv_report_free)>;

Ctx make_ctx() { return Ctx(lv_context_new(), lv_context_free); }

Rep take(lv_report* r) { return Rep(r, lv_report_free); }

} // namespace

TEST_CASE("context setters validate their ranges") {
    auto ctx = make_ctx();
    REQUIRE(ctx);
    CHECK(lv_set_precision(ctx.get(), 16) == LV_ERR_ARGUMENT);
    CHECK(std::string(lv_last_error(ctx.get())).find("precision") != std::string::npos);
    CHECK(lv_set_precision(ctx.get(), 256) == LV_OK);
    CHECK(lv_set_threads(ctx.get(), 0) == LV_ERR_ARGUMENT);
    CHECK(lv_set_threads(ctx.get(), 2) == LV_OK);
    CHECK(lv_set_seed(nullptr, 1) == LV_ERR_ARGUMENT);
    CHECK(std::string(lv_version()) == "1.0.0");
}

TEST_CASE("bad inputs map to argument and domain errors") {
    auto ctx = make_ctx();
    lv_report* out = nullptr;
    CHECK(lv_thresholds(ctx.get(), 7, 7, "nine/fifths", 1, &out) == LV_ERR_ARGUMENT);
    CHECK(out == nullptr);
    CHECK(lv_thresholds(ctx.get(), 8, 7, nullptr, 1, &out) == LV_ERR_ARGUMENT);
    CHECK(lv_claims(ctx.get(), 3, &out) == LV_ERR_ARGUMENT);
    CHECK(lv_claims(ctx.get(), 10, nullptr) == LV_ERR_ARGUMENT);
    // p above the critical exponent is outside the subcritical range.
    CHECK(lv_thresholds(ctx.get(), 7, 7, "3", 1, &out) == LV_ERR_DOMAIN);
    CHECK(!std::string(lv_last_error(ctx.get())).empty());
    CHECK(lv_shoot(ctx.get(), 5, "2", nullptr, 1, -1, 1000, 1e-10, &out) != LV_OK);
    CHECK(lv_report_outcome(nullptr) == LV_INCONCLUSIVE);
    CHECK(std::string(lv_report_json(nullptr)).empty());
}

TEST_CASE("thresholds report at n=7 parses and passes") {
    auto ctx = make_ctx();
    lv_report* raw = nullptr;
    REQUIRE(lv_thresholds(ctx.get(), 7, 7, "9/5", 1, &raw) == LV_OK);
    auto rep = take(raw);
    CHECK(lv_report_outcome(rep.get()) == LV_PASS);
    auto doc = nlohmann::json::parse(lv_report_json(rep.get()));
    CHECK(doc["command"] == "thresholds");
    CHECK(doc["summary"]["outcome"] == "pass");
    CHECK(doc["summary"]["violated"] == 0);
    CHECK(!doc["verdicts"].empty());
    std::string csv = lv_report_csv(rep.get());
    CHECK(csv.rfind("n,p,q,", 0) == 0);
    CHECK(std::string(lv_report_text(rep.get())).find("thresholds") != std::string::npos);
}

TEST_CASE("identical seeds give byte-identical JSON") {
    auto run = [](uint64_t seed) {
        auto ctx = make_ctx();
        lv_set_seed(ctx.get(), seed);
        int dims[] = {3, 6};
        lv_report* raw = nullptr;
        REQUIRE(lv_identities(ctx.get(), 40, LV_LAB_DOUBLE, dims, 2, &raw) == LV_OK);
        auto rep = take(raw);
        CHECK(lv_report_outcome(rep.get()) == LV_PASS);
        return std::string(lv_report_json(rep.get()));
    };
    std::string a = run(9), b = run(9), c = run(10);
    CHECK(a == b);
    CHECK(a != c);
}

TEST_CASE("shoot and sweep reports carry their classification") {
    auto ctx = make_ctx();
    lv_report* raw = nullptr;
    REQUIRE(lv_shoot(ctx.get(), 5, "2", nullptr, 1, 1, 1000, 1e-10, &raw) == LV_OK);
    auto shot = take(raw);
    auto doc = nlohmann::json::parse(lv_report_json(shot.get()));
    CHECK(doc["data"]["classification"] == "crossed");
    CHECK(doc["data"]["r_cross"].get<double>() > 0);

    REQUIRE(lv_sweep(ctx.get(), 5, "2", 1, 0.5, 4, 4, 1000, &raw) == LV_OK);
    auto sw = take(raw);
    doc = nlohmann::json::parse(lv_report_json(sw.get()));
    CHECK(doc["data"]["rows"].size() == 4);
    CHECK(lv_report_outcome(sw.get()) == LV_PASS);
}
