#include "altfix/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "altfix/cauchy.hpp"
#include "altfix/certificates.hpp"
#include "altfix/iteration.hpp"
#include "altfix/stability.hpp"
#include "altfix/tolerances.hpp"
#include "altfix/validation.hpp"
#include "altfix/version.hpp"

namespace altfix {

std::string format_scalar(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

using json = nlohmann::ordered_json;

double arg_double(const ExperimentDecl& e, const char* key, double fallback) {
    const auto it = e.args.find(key);
    return it == e.args.end() ? fallback
                              : std::strtod(it->second.c_str(), nullptr);
}

std::uint64_t arg_uint(const ExperimentDecl& e, const char* key,
                       std::uint64_t fallback) {
    const auto it = e.args.find(key);
    return it == e.args.end() ? fallback
                              : std::strtoull(it->second.c_str(), nullptr, 10);
}

json validation_to_json(const ValidationReport& rep) {
    json j;
    j["subject"] = rep.subject;
    j["passed"] = rep.passed();
    j["seed"] = rep.seed;
    j["n_samples"] = rep.n_samples;
    j["exhaustive"] = rep.exhaustive;
    json checks = json::array();
    for (const AxiomCheck& c : rep.checks) {
        json cj;
        cj["name"] = c.name;
        cj["passed"] = c.passed;
        cj["worst_margin"] = c.worst_margin;
        if (!c.witness.empty()) cj["witness"] = c.witness;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    return j;
}

json cert_to_json(const CertificateReport& rep, const MetricSpace& space) {
    json j;
    j["condition"] = rep.condition_id;
    j["verdict"] = rep.passed() ? "pass" : "fail";
    j["worst_margin"] = rep.worst_margin;
    j["witness"] = {{"x", space.describe_point(rep.witness.x)},
                    {"y", space.describe_point(rep.witness.y)}};
    j["witness_lhs"] = rep.witness_lhs;
    j["witness_rhs"] = rep.witness_rhs;
    j["pairs_checked"] = rep.pairs_checked;
    j["pairs_skipped"] = rep.pairs_skipped;
    j["parameters"] = rep.parameters;
    j["seed"] = rep.seed;
    j["evidence"] = rep.evidence;
    j["notes"] = rep.notes;
    return j;
}

void write_trace_csv(const std::filesystem::path& path,
                     const MetricSpace& space, const IterationTrace& tr) {
    std::ofstream out(path);
    out << "step";
    if (space.is_finite()) {
        out << ",point";
    } else {
        for (std::size_t j = 0; j < space.dim(); ++j) out << ",x" << j;
    }
    out << ",rho";
    if (!tr.sigma.empty()) out << ",sigma";
    if (!tr.bound.empty()) out << ",bound";
    out << "\n";
    for (std::size_t k = 0; k < tr.orbit.size(); ++k) {
        out << k;
        if (space.is_finite()) {
            out << "," << space.describe_point(tr.orbit[k]);
        } else {
            for (double c : tr.orbit[k].coords())
                out << "," << format_scalar(c);
        }
        out << ",";
        if (k < tr.rho.size()) out << format_scalar(tr.rho[k]);
        if (!tr.sigma.empty()) {
            out << ",";
            if (k < tr.sigma.size()) out << format_scalar(tr.sigma[k]);
        }
        if (!tr.bound.empty()) {
            out << ",";
            if (k < tr.bound.size()) out << format_scalar(tr.bound[k]);
        }
        out << "\n";
    }
}

void write_ranks_csv(const std::filesystem::path& path,
                     const RankSequenceResult& res) {
    std::ofstream out(path);
    out << "j,m,n,alpha,beta,alpha01,alpha10,alpha11\n";
    for (std::size_t j = 0; j < res.recorded(); ++j) {
        out << j << "," << res.m[j] << "," << res.n[j] << ","
            << format_scalar(res.alpha[j]) << ","
            << format_scalar(res.beta[j]);
        for (std::size_t q : {1u, 2u, 3u}) {
            out << ",";
            if (!std::isnan(res.alpha_pq[q][j]))
                out << format_scalar(res.alpha_pq[q][j]);
        }
        out << "\n";
    }
}

// Everything an experiment dispatcher needs.
struct RunContext {
    const ProblemSpec& spec;
    MetricSpace space;
    std::filesystem::path out_dir;

    AlteringFunction altering(const std::string& name) const {
        const FuncDecl& d = spec.altering_decls.at(name);
        auto body = d.body;
        const std::string var = d.var;
        return AlteringFunction::with_default_grid(
            ScalarFunc::custom(
                name, [body, var](double t) { return body.eval({{var, t}}); }),
            space.diameter_estimate());
    }

    ComparisonFunction comparison(const std::string& name) const {
        const FuncDecl& d = spec.comparison_decls.at(name);
        auto body = d.body;
        const std::string var = d.var;
        return ComparisonFunction::with_default_grid(
            ScalarFunc::custom(
                name, [body, var](double s) { return body.eval({{var, s}}); }),
            space.diameter_estimate());
    }

    BoundedDecayFunction decay(const std::string& name) const {
        const FuncDecl& d = spec.decay_decls.at(name);
        auto body = d.body;
        const std::string var = d.var;
        return BoundedDecayFunction(ScalarFunc::custom(
            name, [body, var](double t) { return body.eval({{var, t}}); }));
    }
};

std::string trace_status(const IterationTrace& tr) {
    switch (tr.stop_reason) {
        case StopReason::Converged:
        case StopReason::FixedPointHit: return "pass";
        default: return "inconclusive";
    }
}

json trace_to_json(const MetricSpace& space, const IterationTrace& tr,
                   double tol) {
    json j;
    j["stop_reason"] = to_string(tr.stop_reason);
    j["steps"] = tr.orbit.size() - 1;
    if (tr.limit) j["limit"] = space.describe_point(*tr.limit);
    if (!tr.rho.empty()) j["final_rho"] = tr.rho.back();
    if (!tr.error.empty()) j["error"] = tr.error;
    if (!tr.bound.empty() && tr.limit) {
        // Error-bound domination along the observed orbit.
        bool ok = true;
        double worst = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < tr.orbit.size(); ++k) {
            const double observed = space.distance(tr.orbit[k], *tr.limit);
            const double slack = tr.bound[k] + tol - observed;
            worst = std::min(worst, slack);
            if (slack < 0.0) ok = false;
        }
        j["bound_dominates_orbit"] = ok;
        j["bound_worst_slack"] = worst;
    }
    return j;
}

SectionResult run_certificate(const RunContext& ctx, const ExperimentDecl& e) {
    SectionResult sec;
    sec.kind = e.kind;
    json body;
    const std::uint64_t n = arg_uint(e, "n_samples", ctx.spec.n_samples);
    body["params"] = {{"n_samples", n}};

    const SelfMap map = build_map(ctx.spec);
    CertificateReport cert;
    if (e.kind == "banach") {
        cert = check_banach(ctx.space, map, arg_double(e, "alpha", 0), n);
    } else if (e.kind == "weak") {
        cert = check_weak_contraction(ctx.space, map,
                                      arg_double(e, "alpha", 0),
                                      arg_double(e, "lambda", 0), n);
    } else if (e.kind == "altering") {
        const AlteringFunction phi = ctx.altering(e.args.at("phi"));
        const ComparisonFunction psi = ctx.comparison(e.args.at("psi"));
        const ValidationReport phi_rep = validate_altering(phi);
        const ValidationReport psi_rep = validate_comparison(psi);
        body["phi_validation"] = validation_to_json(phi_rep);
        body["psi_validation"] = validation_to_json(psi_rep);
        if (!phi_rep.passed()) {
            body["diagnostic"] =
                "altering function failed validation; certificate skipped";
            sec.status = "fail";
            sec.body = std::move(body);
            return sec;
        }
        cert = check_altering_contraction(SymmetricE(ctx.space, phi), map,
                                          psi, n);
    } else if (e.kind == "abc") {
        const AlteringFunction phi = ctx.altering(e.args.at("phi"));
        cert = check_abc_contraction(SymmetricE(ctx.space, phi), map,
                                     ctx.comparison(e.args.at("a")),
                                     ctx.comparison(e.args.at("b")),
                                     ctx.comparison(e.args.at("c")), n);
    } else {  // theorem5
        const BoundedDecayFunction K = ctx.decay(e.args.at("K"));
        body["decay_validation"] = validation_to_json(validate_decay(K));
        cert = check_theorem5(ctx.space, map, arg_double(e, "a", 0),
                              arg_double(e, "b", 0), K, n);
    }
    body["certificate"] = cert_to_json(cert, ctx.space);
    sec.status = cert.passed() ? "pass" : "fail";
    sec.body = std::move(body);
    return sec;
}

SectionResult run_iterate(const RunContext& ctx, const ExperimentDecl& e,
                          std::size_t index) {
    SectionResult sec;
    sec.kind = e.kind;
    const SelfMap map = build_map(ctx.spec);
    const Point start = parse_point(ctx.spec, e.args.at("start"));
    const std::uint64_t max_iters =
        arg_uint(e, "max_iters", ctx.spec.max_iters);
    const double tol = arg_double(e, "tol", ctx.spec.tol);

    json body;
    body["params"] = {{"max_iters", max_iters}, {"tol", tol}};

    IterationTrace tr;
    if (e.args.count("phi")) {
        tr = picard_orbit(
            SymmetricE(ctx.space, ctx.altering(e.args.at("phi"))), map, start,
            max_iters, tol);
    } else {
        tr = picard_orbit(ctx.space, map, start, max_iters, tol);
    }
    if (e.args.count("rate")) {
        const double rate = arg_double(e, "rate", 0.0);
        attach_bound_curve(tr, rate);
        body["params"]["rate"] = rate;
    }

    char name[32];
    std::snprintf(name, sizeof name, "trace_%02zu.csv", index);
    write_trace_csv(ctx.out_dir / name, ctx.space, tr);
    sec.csv_files.push_back(name);

    body["trace"] = trace_to_json(ctx.space, tr, tol);
    body["trace"]["csv"] = name;
    sec.status = trace_status(tr);
    sec.body = std::move(body);
    return sec;
}

SectionResult run_classify(const RunContext& ctx, const ExperimentDecl& e) {
    SectionResult sec;
    sec.kind = e.kind;
    const SelfMap map = build_map(ctx.spec);
    const std::uint64_t max_iters =
        arg_uint(e, "max_iters", ctx.spec.max_iters);
    const double tol = arg_double(e, "tol", ctx.spec.tol);

    std::vector<Point> starts;
    std::stringstream ss(e.args.at("starts"));
    std::string part;
    while (std::getline(ss, part, ';'))
        starts.push_back(parse_point(ctx.spec, part));

    const PicardClassification cls =
        classify_picard(ctx.space, map, starts, max_iters, tol);

    json body;
    body["params"] = {{"max_iters", max_iters}, {"tol", tol}};
    body["verdict"] = to_string(cls.verdict);
    body["distinct_limits"] = cls.distinct_limits.size();
    json fixed = json::array();
    for (const Point& p : cls.fixed_point_estimate)
        fixed.push_back(ctx.space.describe_point(p));
    body["fixed_point_estimate"] = std::move(fixed);
    if (!cls.detail.empty()) body["detail"] = cls.detail;
    json per_start = json::array();
    for (const StartResult& r : cls.per_start) {
        json rj;
        rj["start"] = ctx.space.describe_point(r.start);
        rj["stop_reason"] = to_string(r.stop_reason);
        if (r.limit) {
            rj["limit"] = ctx.space.describe_point(*r.limit);
            rj["limit_fixed"] = r.limit_fixed;
            rj["fixed_residual"] = r.fixed_residual;
        }
        per_start.push_back(std::move(rj));
    }
    body["per_start"] = std::move(per_start);

    sec.status =
        cls.verdict == PicardVerdict::Inconclusive ? "inconclusive" : "pass";
    sec.body = std::move(body);
    return sec;
}

SectionResult run_cauchy(const RunContext& ctx, const ExperimentDecl& e,
                         std::size_t index) {
    SectionResult sec;
    sec.kind = e.kind;
    const double eta = arg_double(e, "eta", 1.0);
    const std::uint64_t N = arg_uint(e, "N", 10'000);
    const std::uint64_t J = arg_uint(e, "J", 50);
    const std::uint64_t window =
        arg_uint(e, "window", std::max<std::uint64_t>(1, N / 10));
    const std::uint64_t tail =
        arg_uint(e, "tail", std::min<std::uint64_t>(N + 1, 200));
    const double semi_tol =
        arg_double(e, "tol", 10.0 / static_cast<double>(N));

    json body;
    body["params"] = {{"source", "harmonic"}, {"N", N},
                      {"eta", eta},           {"J", J},
                      {"window", window},     {"tail", tail},
                      {"tol", semi_tol}};

    const SequencePrefix seq = harmonic_prefix(N);

    const SemiCauchyReport semi = is_semi_cauchy(seq, window, semi_tol);
    body["semi_cauchy"] = {{"passed", semi.passed},
                           {"tail_max", semi.tail_max},
                           {"third_max", semi.third_max},
                           {"window", semi.window},
                           {"tol", semi.tol}};

    const CauchyReport cr = is_cauchy(seq, tail, eta);
    body["cauchy_at_eta"] = {
        {"passed", cr.passed},
        {"tail_pair_max", cr.tail_pair_max},
        {"witness", {cr.witness_m, cr.witness_n}},
        {"tail", cr.tail},
        {"note", "trailing-window check only; a successful extraction below "
                 "witnesses pairs above eta"}};

    bool ok = semi.passed;
    try {
        const RankSequenceResult res = extract_rank_sequences(seq, eta, J);
        char name[32];
        std::snprintf(name, sizeof name, "ranks_%02zu.csv", index);
        write_ranks_csv(ctx.out_dir / name, res);
        sec.csv_files.push_back(name);

        json rj;
        rj["j_eta"] = res.j_eta;
        rj["recorded"] = res.recorded();
        rj["m0"] = res.m.front();
        rj["n0"] = res.n.front();
        rj["alpha0"] = res.alpha.front();
        rj["beta0"] = res.beta.front();
        bool flags_ok = true;
        for (std::size_t j = 0; j < res.recorded(); ++j) {
            if (!res.eq201[j]) flags_ok = false;
            if (j >= res.j_eta && !res.eq202[j]) flags_ok = false;
        }
        rj["flags_201_202_ok"] = flags_ok;
        rj["csv"] = name;
        rj["note"] =
            "finite-prefix extraction is evidence for the infinite-sequence "
            "statement, not proof";
        body["rank_sequences"] = std::move(rj);
        ok = ok && flags_ok;

        if (res.recorded() >= 10) {
            const TrendReport tr = verify_prop1_trends(res, 0.25);
            body["trends"] = {
                {"alpha_strictly_above_eta", tr.alpha_strictly_above_eta},
                {"tail_alpha_dev", tr.tail_alpha_dev},
                {"tail_alpha_pq_dev", tr.tail_alpha_pq_dev},
                {"within_tol", tr.within_tol},
                {"trend_tol", tr.trend_tol},
                {"tail_fraction", tr.tail_fraction},
                {"note", tr.note}};
        }
    } catch (const extraction_error& ex) {
        body["extraction_error"] = ex.what();
        ok = false;
    }
    sec.status = ok ? "pass" : "fail";
    sec.body = std::move(body);
    return sec;
}

SectionResult run_stability(const RunContext& ctx, const ExperimentDecl& e) {
    SectionResult sec;
    sec.kind = e.kind;
    const SelfMap map = build_map(ctx.spec);
    const Point u0 = parse_point(ctx.spec, e.args.at("u0"));
    const double delta = arg_double(e, "delta", 1.0);
    const std::uint64_t trials = arg_uint(e, "trials", 20);
    const std::uint64_t max_iters =
        arg_uint(e, "max_iters", ctx.spec.max_iters);
    const double tol = arg_double(e, "tol", ctx.spec.tol);
    std::optional<double> rate;
    if (e.args.count("rate")) rate = arg_double(e, "rate", 0.0);

    const StabilityVerdict v = hyers_ulam_probe(ctx.space, map, u0, delta,
                                                trials, max_iters, tol, rate);

    json body;
    body["params"] = {{"delta", delta},
                      {"trials", trials},
                      {"max_iters", max_iters},
                      {"tol", tol}};
    if (rate) body["params"]["rate"] = *rate;
    body["verdict"] = to_string(v.verdict);
    body["mu_estimate"] = v.mu_estimate;
    body["mu_note"] = "sampled lower estimate";
    body["distinct_limits"] = v.distinct_limits;
    json fixed = json::array();
    for (const Point& p : v.fix_estimate)
        fixed.push_back(ctx.space.describe_point(p));
    body["fix_estimate"] = std::move(fixed);
    json trials_j = json::array();
    for (const TrialRecord& t : v.trials) {
        json tj;
        tj["start"] = ctx.space.describe_point(t.start);
        tj["stop_reason"] = to_string(t.stop_reason);
        if (t.limit) {
            tj["limit"] = ctx.space.describe_point(*t.limit);
            tj["limit_fixed"] = t.limit_fixed;
        }
        if (t.bound_checked) {
            tj["bound_satisfied"] = t.bound_satisfied;
            tj["bound_worst_slack"] = t.worst_bound_slack;
        }
        trials_j.push_back(std::move(tj));
    }
    body["trials"] = std::move(trials_j);
    body["notes"] = v.notes;

    sec.status =
        v.verdict == StabilityOutcome::Inconclusive ? "inconclusive" : "pass";
    sec.body = std::move(body);
    return sec;
}

}  // namespace

int ExperimentReport::exit_code() const {
    bool any_inconclusive = false;
    for (const SectionResult& s : sections) {
        if (s.status == "fail") return 1;
        if (s.status == "inconclusive") any_inconclusive = true;
    }
    return any_inconclusive ? 2 : 0;
}

std::string ExperimentReport::overall_status() const {
    switch (exit_code()) {
        case 0: return "pass";
        case 2: return "inconclusive";
        default: return "fail";
    }
}

nlohmann::ordered_json ExperimentReport::to_json() const {
    json j;
    j["artifact"] = {{"name", kArtifactName}, {"version", kArtifactVersion}};
    j["spec"] = spec_echo;
    json secs = json::array();
    for (const SectionResult& s : sections) {
        json sj;
        sj["kind"] = s.kind;
        sj["status"] = s.status;
        sj["wall_time_s"] = s.wall_time_s;
        sj["csv_files"] = s.csv_files;
        sj["result"] = s.body;
        secs.push_back(std::move(sj));
    }
    j["sections"] = std::move(secs);
    j["status"] = overall_status();
    return j;
}

ExperimentReport run_experiments(const ProblemSpec& spec,
                                 const std::filesystem::path& out_dir) {
    const std::filesystem::path dir =
        out_dir.empty() ? std::filesystem::path(".") : out_dir;
    std::filesystem::create_directories(dir);
    RunContext ctx{spec, build_space(spec), dir};

    ExperimentReport rep;
    rep.spec_echo = {{"canonical_text", spec.to_text()},
                     {"seed", spec.seed},
                     {"tol", spec.tol},
                     {"max_iters", spec.max_iters},
                     {"n_samples", spec.n_samples}};

    for (std::size_t i = 0; i < spec.experiments.size(); ++i) {
        const ExperimentDecl& e = spec.experiments[i];
        const auto t0 = std::chrono::steady_clock::now();
        SectionResult sec;
        try {
            if (e.kind == "iterate") {
                sec = run_iterate(ctx, e, i);
            } else if (e.kind == "classify") {
                sec = run_classify(ctx, e);
            } else if (e.kind == "cauchy") {
                sec = run_cauchy(ctx, e, i);
            } else if (e.kind == "stability") {
                sec = run_stability(ctx, e);
            } else {
                sec = run_certificate(ctx, e);
            }
        } catch (const std::domain_error& ex) {
            // Domain errors trace back to the spec's own data (points
            // outside the carrier, maps that are not selfmaps): abort.
            throw spec_error(e.line, 1,
                             std::string("experiment '") + e.kind + "': " +
                                 ex.what());
        } catch (const std::exception& ex) {
            sec.kind = e.kind;
            sec.status = "fail";
            sec.body = {{"diagnostic", ex.what()}};
        }
        sec.wall_time_s = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
        rep.sections.push_back(std::move(sec));
    }
    return rep;
}

nlohmann::ordered_json strip_wall_times(nlohmann::ordered_json j) {
    if (j.is_object()) {
        j.erase("wall_time_s");
        for (auto& [key, value] : j.items()) value = strip_wall_times(value);
    } else if (j.is_array()) {
        for (auto& value : j) value = strip_wall_times(value);
    }
    return j;
}

}  // namespace altfix
