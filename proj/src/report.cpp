#include "liouville/report.hpp"

#include "liouville/claims.hpp"
#include "liouville/shooter.hpp"
#include "liouville/thresholds.hpp"
#include "liouville/young.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace lv {

using Json = nlohmann::ordered_json;

std::vector<std::string> enclosure_strings(const RatInterval& x, int digits) {
    return {x.lo().decimal(digits, Round::Down), x.hi().decimal(digits, Round::Up)};
}

namespace {

Json enc(const RatInterval& x) { return enclosure_strings(x); }

struct Entry {
    std::string subject, verdict, detail;
};

// One command's content before rendering.
struct Doc {
    Json data = Json::object();
    std::vector<Entry> entries;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;

    void add(std::string subject, std::string verdict, std::string detail = {}) {
        entries.push_back({std::move(subject), std::move(verdict), std::move(detail)});
    }
};

bool is_bad(const std::string& v) { return v == "violated" || v == "failed"; }
bool is_open(const std::string& v) { return v == "inconclusive"; }

Outcome outcome_of(const std::vector<Entry>& es) {
    bool open = false;
    for (const auto& e : es) {
        if (is_bad(e.verdict)) return Outcome::Violated;
        open = open || is_open(e.verdict);
    }
    return open ? Outcome::Inconclusive : Outcome::Pass;
}

const char* outcome_name(Outcome o) {
    switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Violated: return "violated";
    case Outcome::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

Json config_base(const std::string& command, const RunOptions& opt) {
    return Json{{"command", command}, {"precision", opt.precision}, {"seed", opt.seed}, {"threads", opt.threads}};
}

Report render(const std::string& command, Json config, const Doc& d) {
    Report r;
    r.command = command;
    r.outcome = outcome_of(d.entries);
    long counts[3] = {0, 0, 0};
    Json verdicts = Json::array();
    for (const auto& e : d.entries) {
        Json v{{"subject", e.subject}, {"verdict", e.verdict}};
        if (!e.detail.empty()) v["detail"] = e.detail;
        verdicts.push_back(v);
        ++counts[is_bad(e.verdict) ? 1 : is_open(e.verdict) ? 2 : 0];
    }
    Json doc{{"command", command},
             {"version", kVersion},
             {"seed", config.value("seed", std::uint64_t(0))},
             {"config", config},
             {"summary",
              {{"outcome", outcome_name(r.outcome)},
               {"passed", counts[0]},
               {"violated", counts[1]},
               {"inconclusive", counts[2]}}},
             {"verdicts", verdicts},
             {"data", d.data}};
    r.json = doc.dump(2) + "\n";

    std::ostringstream csv;
    for (size_t i = 0; i < d.csv_header.size(); ++i) csv << (i ? "," : "") << csv_cell(d.csv_header[i]);
    csv << "\n";
    for (const auto& row : d.csv_rows) {
        for (size_t i = 0; i < row.size(); ++i) csv << (i ? "," : "") << csv_cell(row[i]);
        csv << "\n";
    }
    r.csv = csv.str();

    std::ostringstream txt;
    txt << command << " (version " << kVersion << ", seed " << doc["seed"] << ")\n";
    for (const auto& e : d.entries) {
        txt << "  [" << e.verdict << "] " << e.subject;
        if (!e.detail.empty()) txt << ": " << e.detail;
        txt << "\n";
    }
    txt << "outcome: " << outcome_name(r.outcome) << " (" << counts[0] << " passed, " << counts[1] << " violated, "
        << counts[2] << " inconclusive)\n";
    r.text = txt.str();
    return r;
}

std::string verdict_word(ClaimVerdict v) {
    switch (v) {
    case ClaimVerdict::CertifiedAllN: return "certified";
    case ClaimVerdict::VerifiedOnRange: return "verified-on-range";
    case ClaimVerdict::Violated: return "violated";
    case ClaimVerdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::string verdict_word(Verdict v) {
    switch (v) {
    case Verdict::Certified: return "certified";
    case Verdict::Violated: return "violated";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::string compare_word(const RatInterval& x, const Rational& bound, bool greater) {
    if (greater) return x.lo() > bound ? "certified" : x.hi() <= bound ? "violated" : "inconclusive";
    return x.hi() < bound ? "certified" : x.lo() >= bound ? "violated" : "inconclusive";
}

// ---- claims ----

Doc claims_doc(int n_max, const RunOptions& opt) {
    Doc d;
    Json list = Json::array();
    d.csv_header = {"claim", "verdict", "method", "n_lo", "n_hi", "tail_from", "margin", "margin_n", "statement"};
    for (const auto& c : verify_all_claims(n_max, opt.precision)) {
        Json checks = Json::array();
        for (const auto& k : c.checks)
            checks.push_back({{"name", k.name}, {"method", k.method}, {"pass", k.pass}, {"detail", k.detail}});
        std::string margin = c.margin ? c.margin->decimal(20, Round::Down) : "";
        Json j{{"id", c.id},
               {"statement", c.statement},
               {"n_range", {c.n_lo, c.n_hi}},
               {"q_range", c.q_range},
               {"method", c.method},
               {"verdict", verdict_word(c.verdict)},
               {"margin", c.margin ? Json(margin) : Json(nullptr)},
               {"margin_n", c.margin_n},
               {"tail_from", c.tail_from ? Json(*c.tail_from) : Json(nullptr)},
               {"failures", c.failures},
               {"inconclusive", c.inconclusive},
               {"checks", checks}};
        list.push_back(j);
        std::ostringstream det;
        det << c.method << ", n in [" << c.n_lo << ", " << c.n_hi << "]";
        if (c.tail_from) det << ", all n >= " << *c.tail_from;
        d.add("claim " + std::to_string(c.id), verdict_word(c.verdict), det.str());
        for (const auto& k : c.checks)
            if (!k.pass) d.add("claim " + std::to_string(c.id) + " check " + k.name, "failed", k.detail);
        d.csv_rows.push_back({std::to_string(c.id), verdict_word(c.verdict), c.method, std::to_string(c.n_lo),
                              std::to_string(c.n_hi), c.tail_from ? std::to_string(*c.tail_from) : "", margin,
                              std::to_string(c.margin_n), c.statement});
    }
    for (const auto& [name, cert] : std::vector<std::pair<std::string, PolyCertificate>>{
             {"0.6n^3 + 4n^2 + 3n - 2 > 0 on [8, inf)", closing_polynomial_certificate()}}) {
        bool ok = cert.verdict == PolyVerdict::Positive;
        d.add(name, ok ? "certified" : "failed", cert.describe());
        d.data["closing_polynomial"] = {{"verdict", ok ? "certified" : "failed"}, {"detail", cert.describe()}};
    }
    d.data["claims"] = list;
    return d;
}

// ---- thresholds ----

Json quad_json(const QuadExt& x, unsigned precision) {
    return Json{{"exact", x.str()}, {"enclosure", enc(x.enclose(precision))}};
}

void threshold_point(Doc& d, Json& points, int n, const Rational& p, const RunOptions& opt) {
    ThresholdOptions to;
    to.precision = opt.precision;
    auto r = threshold_report(n, p, to);
    std::string tag = "n=" + std::to_string(n) + ", p=" + p.str();
    Json j{{"n", n}, {"p", p.str()}, {"q", r.q.str()}, {"MC", enc(r.MC)}};
    j["M1"] = r.M1 ? enc(*r.M1) : Json("infinity");
    if (r.Delta) j["Delta"] = quad_json(*r.Delta, opt.precision);
    if (r.U0) {
        j["U0"] = {{"U0", enc(r.U0->U0)},   {"U1", enc(r.U0->U1)},       {"U2", enc(r.U0->U2)},
                   {"K3_U0", enc(r.U0->K3_U0)}, {"inside", r.U0->inside}};
        d.add("U1 < U0 < U2 and K3(U0) > 0 (" + tag + ")", r.U0->inside ? "certified" : "inconclusive");
    }
    if (r.M2) {
        Json m{{"zero_branch", r.M2->zero_branch}, {"value", enc(r.M2->value)}};
        if (r.M2->best) m["eps"] = r.M2->best->eps.str();
        j["M2"] = m;
    }
    j["m2_lt_m1"] = verdict_word(r.m2_lt_m1);
    d.add("M2 < M1 (" + tag + ")", verdict_word(r.m2_lt_m1));
    Json chain = Json::array();
    for (const auto& c : r.chain) {
        chain.push_back({{"name", c.name}, {"pass", c.pass}, {"lhs", enc(c.lhs)}, {"rhs", enc(c.rhs)}});
        std::string v = c.pass ? "certified" : c.lhs.lo() >= c.rhs.hi() ? "violated" : "inconclusive";
        d.add("chain " + c.name + " (" + tag + ")", v);
    }
    j["chain"] = chain;
    Json small = Json::array();
    for (const auto& s : r.small_n) {
        small.push_back({{"U", s.U.str()},
                         {"eps0", s.eps0.str()},
                         {"K3", s.K3.decimal(20)},
                         {"K5_margin", enc(s.K5_margin)},
                         {"K3_ok", s.K3_ok},
                         {"K5_ok", s.K5_ok},
                         {"leading_sign_mismatch", s.leading_sign_mismatch}});
        d.add("K3 >= eps0 and K5 >= sqrt(eps0) (" + tag + ")", s.pass ? "certified" : "failed");
    }
    j["small_n"] = small;
    // Bounds stated for the critical exponent in the two lowest large dimensions.
    if (p == critical_p(n)) {
        if (n == 7 && r.M1) d.add("M1 > 2.6 (n=7)", compare_word(*r.M1, R("2.6"), true));
        if (n == 7 && r.M2) d.add("M2 < 0.8 (n=7)", compare_word(r.M2->value, R("0.8"), false));
        if (r.Delta && (n == 7 || n == 8)) {
            Rational bound = n == 7 ? R("0.284") : R("0.322");
            int s = (*r.Delta - QuadExt(bound)).sign();
            d.add("Delta > " + bound.decimal(3) + " (n=" + std::to_string(n) + ")", s > 0 ? "certified" : "violated");
        }
    }
    std::string m1lo = r.M1 ? r.M1->lo().decimal(20, Round::Down) : "inf";
    std::string m1hi = r.M1 ? r.M1->hi().decimal(20, Round::Up) : "inf";
    std::string m2lo = r.M2 ? r.M2->value.lo().decimal(20, Round::Down) : "";
    std::string m2hi = r.M2 ? r.M2->value.hi().decimal(20, Round::Up) : "";
    d.csv_rows.push_back({std::to_string(n), p.str(), r.q.str(), r.MC.lo().decimal(20, Round::Down),
                          r.MC.hi().decimal(20, Round::Up), m1lo, m1hi, m2lo, m2hi, verdict_word(r.m2_lt_m1)});
    points.push_back(j);
}

Doc thresholds_doc(const ThresholdArgs& a, const RunOptions& opt) {
    if (a.n_lo < 3 || a.n_hi < a.n_lo) throw DomainError("thresholds: need 3 <= n_lo <= n_hi");
    if (a.p_points < 1) throw DomainError("thresholds: p_points must be positive");
    Doc d;
    d.csv_header = {"n", "p", "q", "MC_lo", "MC_hi", "M1_lo", "M1_hi", "M2_lo", "M2_hi", "m2_lt_m1"};
    Json points = Json::array();
    if (a.p_points == 1 || a.p) {
        for (int n = a.n_lo; n <= a.n_hi; ++n) threshold_point(d, points, n, a.p ? *a.p : critical_p(n), opt);
        d.data["points"] = points;
        return d;
    }
    // Grid mode: the M2 < M1 comparison over the top window of p.
    ThresholdOptions to;
    to.precision = opt.precision;
    Json rows = Json::array();
    std::map<int, std::vector<Verdict>> per_n;
    for (int n = std::max(7, a.n_lo); n <= a.n_hi; ++n) {
        for (const auto& r : m2_lt_m1_grid(n, n, a.p_points, to)) {
            rows.push_back({{"n", r.n},
                            {"p", r.p.str()},
                            {"M2", enc(r.m2)},
                            {"M1", enc(r.m1)},
                            {"verdict", verdict_word(r.verdict)},
                            {"precision", r.precision}});
            per_n[n].push_back(r.verdict);
            d.csv_rows.push_back({std::to_string(r.n), r.p.str(), critical_q(r.p).str(), "", "",
                                  r.m1.lo().decimal(20, Round::Down), r.m1.hi().decimal(20, Round::Up),
                                  r.m2.lo().decimal(20, Round::Down), r.m2.hi().decimal(20, Round::Up),
                                  verdict_word(r.verdict)});
        }
    }
    for (const auto& [n, vs] : per_n) {
        bool bad = std::any_of(vs.begin(), vs.end(), [](Verdict v) { return v == Verdict::Violated; });
        bool open = std::any_of(vs.begin(), vs.end(), [](Verdict v) { return v == Verdict::Inconclusive; });
        d.add("M2 < M1 on the p-grid (n=" + std::to_string(n) + ")",
              bad ? "violated" : open ? "inconclusive" : "certified", std::to_string(vs.size()) + " points");
    }
    if (a.n_lo < 7) d.data["note"] = "dimensions below 7 have M1 = infinity and are skipped in grid mode";
    d.data["rows"] = rows;
    return d;
}

// ---- identities ----

Doc identities_doc(const IdentityArgs& a, const RunOptions& opt) {
    LabConfig cfg;
    cfg.trials = a.trials;
    cfg.seed = opt.seed;
    cfg.dims = a.dims;
    cfg.precision = a.precision;
    cfg.threads = opt.threads;
    auto r = run_identity_lab(cfg);
    Doc d;
    d.csv_header = {"identity", "n", "frame", "count", "max_residual", "pass"};
    Json stats = Json::array();
    std::map<int, std::pair<double, bool>> per_id;
    for (const auto& s : r.stats) {
        stats.push_back({{"identity", identity_name(s.id)},
                         {"n", s.n},
                         {"frame", frame_kind_name(s.frame)},
                         {"count", s.count},
                         {"max_residual", s.max_residual},
                         {"pass", s.pass}});
        auto& agg = per_id.try_emplace(static_cast<int>(s.id), 0.0, true).first->second;
        agg.first = std::max(agg.first, s.max_residual);
        agg.second = agg.second && s.pass;
        d.csv_rows.push_back({identity_name(s.id), std::to_string(s.n), frame_kind_name(s.frame),
                              std::to_string(s.count), fmt(s.max_residual), s.pass ? "true" : "false"});
    }
    for (const auto& [id, agg] : per_id)
        d.add(std::string("identity ") + identity_name(static_cast<IdentityId>(id)), agg.second ? "passed" : "failed",
              "max residual " + fmt(agg.first) + ", tolerance " + fmt(r.tolerance));
    d.add("pointwise invariants", r.invariant_failures == 0 ? "passed" : "failed",
          "worst trace " + fmt(r.worst_trace) + ", worst Cauchy-Schwarz gap " + fmt(r.worst_cauchy_schwarz));
    d.add("G11^2 base power", r.base_reading == "v^alpha" ? "passed" : "failed",
          "v^alpha max " + fmt(r.valpha_max) + ", v^gamma max " + fmt(r.vgamma_max));
    d.add("a1/a2 split", r.split_reading == "rows" ? "passed" : "failed",
          "rows max " + fmt(r.rows_max) + ", literal max " + fmt(r.literal_max));
    d.add("negative control (free jets on the master identity)", r.negative_control_fails ? "passed" : "failed",
          "residual range [" + fmt(r.negative_min) + ", " + fmt(r.negative_max) + "]");
    d.add("scaling coherence", r.scaling_max_deviation < 1e-9 && r.scaling_signs_preserved ? "passed" : "failed",
          "max deviation " + fmt(r.scaling_max_deviation));
    d.data = {{"precision", lab_precision_name(a.precision)},
              {"tolerance", r.tolerance},
              {"trials", a.trials},
              {"dims", a.dims},
              {"stats", stats},
              {"invariant_failures", r.invariant_failures},
              {"readings",
               {{"base", r.base_reading},
                {"split", r.split_reading},
                {"valpha_max", r.valpha_max},
                {"vgamma_max", r.vgamma_max},
                {"rows_max", r.rows_max},
                {"literal_max", r.literal_max}}},
              {"negative_control", {{"min", r.negative_min}, {"max", r.negative_max}}},
              {"scaling", {{"max_deviation", r.scaling_max_deviation}, {"signs", r.scaling_signs_preserved}}}};
    return d;
}

// ---- young ----

Doc young_doc(const YoungArgs& a, const RunOptions&) {
    auto scan = young_scan(a.n_lo, a.n_hi, a.p_points);
    Doc d;
    d.csv_header = {"n", "frame", "p", "alpha", "gamma", "feasible", "G", "sigma1", "delta", "reason"};
    Json rows = Json::array();
    std::map<std::pair<int, std::string>, std::pair<long, std::string>> bad;
    for (const auto& r : scan.rows) {
        Json j{{"n", r.n},
               {"frame", r.frame},
               {"p", r.p.str()},
               {"alpha", r.alpha.str()},
               {"gamma", r.gamma.str()},
               {"feasible", r.result.feasible && r.invariants}};
        std::string G, sigma, delta;
        if (r.result.exps) {
            const auto& e = *r.result.exps;
            G = e.G.str();
            sigma = e.sigma1.str();
            delta = std::to_string(e.delta);
            j["exponents"] = {{"p1", e.p1.str()}, {"q1", e.q1.str()}, {"sigma1", sigma}, {"A", e.A.str()},
                              {"B", e.B.str()},   {"G", G},           {"delta", e.delta}};
        } else {
            j["reason"] = r.result.reason;
        }
        rows.push_back(j);
        auto& b = bad[{r.n, r.frame}];
        if (!(r.result.feasible && r.invariants)) {
            if (b.first++ == 0) b.second = r.result.reason.empty() ? "exponent invariants" : r.result.reason;
        }
        d.csv_rows.push_back({std::to_string(r.n), r.frame, r.p.str(), r.alpha.str(), r.gamma.str(),
                              r.result.feasible && r.invariants ? "true" : "false", G, sigma, delta, r.result.reason});
    }
    for (const auto& [key, b] : bad)
        d.add("young feasibility (n=" + std::to_string(key.first) + ", " + key.second + ")",
              b.first == 0 ? "certified" : "failed", b.first == 0 ? "" : b.second);
    d.data = {{"rows", rows}, {"infeasible", scan.infeasible}};
    return d;
}

// ---- shooter ----

Doc shoot_doc(const ShootArgs& a, const RunOptions&) {
    ShotConfig c;
    c.n = a.n;
    c.p = a.p.to_double();
    c.q = a.q ? a.q->to_double() : critical_q(a.p).to_double();
    c.M = a.M;
    c.a = a.a;
    c.r_max = a.r_max;
    c.tol = a.tol;
    auto t = shoot(c);
    Doc d;
    d.csv_header = {"r", "v", "dv"};
    Json samples = Json::array();
    for (const auto& s : t.samples) {
        samples.push_back({s.r, s.v, s.dv});
        d.csv_rows.push_back({fmt(s.r), fmt(s.v), fmt(s.dv)});
    }
    d.add("classification", t.cls == ShotClass::Inconclusive ? "inconclusive" : "passed",
          std::string(shot_class_name(t.cls)) + (t.diagnostics.empty() ? "" : " (" + t.diagnostics + ")"));
    d.add("v non-increasing while positive", t.monotone ? "passed" : "failed");
    Json scaling = Json::array();
    bool critical = !a.q || *a.q == critical_q(a.p);
    if (critical) {
        for (double k : {0.5, 2.0, 5.0}) {
            auto s = scaling_check(c, k);
            scaling.push_back({{"k", k}, {"residual", s.residual}, {"points", s.points}});
            d.add("scaling symmetry k=" + fmt(k), s.residual < 1e-6 ? "passed" : "failed", "residual " + fmt(s.residual));
        }
    }
    d.data = {{"classification", shot_class_name(t.cls)},
              {"r_cross", t.cls == ShotClass::Crossed ? Json(t.r_cross) : Json(nullptr)},
              {"limit", t.cls == ShotClass::Decayed ? Json(t.limit) : Json(nullptr)},
              {"steps", t.steps},
              {"monotone", t.monotone},
              {"diagnostics", t.diagnostics},
              {"q", c.q},
              {"scaling", scaling},
              {"samples", samples}};
    return d;
}

Doc sweep_doc(const SweepArgs& a, const RunOptions& opt) {
    auto r = sweep(a.n, a.p.to_double(), a.M, log_heights(a.h_lo, a.h_hi, a.count), a.r_max, opt.threads);
    Doc d;
    d.csv_header = {"n", "p", "M", "height", "class", "r_cross"};
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"height", row.height},
                        {"class", shot_class_name(row.cls)},
                        {"r_cross", row.cls == ShotClass::Crossed ? Json(row.r_cross) : Json(nullptr)}});
        d.csv_rows.push_back({std::to_string(a.n), a.p.str(), fmt(a.M), fmt(row.height), shot_class_name(row.cls),
                              row.cls == ShotClass::Crossed ? fmt(row.r_cross) : ""});
    }
    std::string tag = "n=" + std::to_string(a.n) + ", p=" + a.p.str() + ", M=" + fmt(a.M);
    d.add("same class at every height (" + tag + ")", r.uniform ? "passed" : "failed");
    d.add("every height crossed (" + tag + ")", r.all_crossed ? "passed" : "inconclusive");
    d.data = {{"n", a.n}, {"p", a.p.str()}, {"q", r.q}, {"M", a.M}, {"rows", rows}};
    return d;
}

Json thr_config(const ThresholdArgs& a, Json c) {
    c["n_lo"] = a.n_lo;
    c["n_hi"] = a.n_hi;
    c["p"] = a.p ? Json(a.p->str()) : Json("critical");
    c["p_points"] = a.p_points;
    return c;
}

Json shoot_config(const ShootArgs& a, Json c) {
    c["n"] = a.n;
    c["p"] = a.p.str();
    c["q"] = a.q ? Json(a.q->str()) : Json("critical");
    c["M"] = a.M;
    c["a"] = a.a;
    c["r_max"] = a.r_max;
    c["tol"] = a.tol;
    return c;
}

Json sweep_config(const SweepArgs& a, Json c) {
    c["n"] = a.n;
    c["p"] = a.p.str();
    c["M"] = a.M;
    c["heights"] = {a.h_lo, a.h_hi, a.count};
    c["r_max"] = a.r_max;
    return c;
}

} // namespace

Report claims_report(int n_max, const RunOptions& opt) {
    Json c = config_base("claims", opt);
    c["n_max"] = n_max;
    return render("claims", c, claims_doc(n_max, opt));
}

Report thresholds_report(const ThresholdArgs& a, const RunOptions& opt) {
    return render("thresholds", thr_config(a, config_base("thresholds", opt)), thresholds_doc(a, opt));
}

Report identities_report(const IdentityArgs& a, const RunOptions& opt) {
    Json c = config_base("identities", opt);
    c["trials"] = a.trials;
    c["lab_precision"] = lab_precision_name(a.precision);
    c["dims"] = a.dims;
    return render("identities", c, identities_doc(a, opt));
}

Report young_report(const YoungArgs& a, const RunOptions& opt) {
    Json c = config_base("young", opt);
    c["n_lo"] = a.n_lo;
    c["n_hi"] = a.n_hi;
    c["p_points"] = a.p_points;
    return render("young", c, young_doc(a, opt));
}

Report shoot_report(const ShootArgs& a, const RunOptions& opt) {
    return render("shoot", shoot_config(a, config_base("shoot", opt)), shoot_doc(a, opt));
}

Report sweep_report(const SweepArgs& a, const RunOptions& opt) {
    return render("sweep", sweep_config(a, config_base("sweep", opt)), sweep_doc(a, opt));
}

Report full_report(const RunOptions& opt) {
    Doc all;
    all.csv_header = {"section", "subject", "verdict", "detail"};
    auto merge = [&](const std::string& section, Doc d) {
        for (auto& e : d.entries) {
            all.csv_rows.push_back({section, e.subject, e.verdict, e.detail});
            all.add(section + ": " + e.subject, e.verdict, e.detail);
        }
        if (all.data.contains(section)) {
            all.data[section].push_back(std::move(d.data));
        } else {
            all.data[section] = Json::array({std::move(d.data)});
        }
    };
    merge("claims", claims_doc(500, opt));
    ThresholdArgs t78;
    t78.n_lo = 7;
    t78.n_hi = 8;
    merge("thresholds", thresholds_doc(t78, opt));
    ThresholdArgs grid;
    grid.n_lo = 7;
    grid.n_hi = 100;
    grid.p_points = 20;
    merge("thresholds", thresholds_doc(grid, opt));
    merge("identities", identities_doc(IdentityArgs{}, opt));
    merge("young", young_doc(YoungArgs{}, opt));
    for (double M : {0.5, 1.0, 4.0}) {
        SweepArgs s;
        s.M = M;
        merge("sweep", sweep_doc(s, opt));
    }
    Json c = config_base("report", opt);
    c["sections"] = {"claims", "thresholds", "identities", "young", "sweep"};
    return render("report", c, all);
}

} // namespace lv
