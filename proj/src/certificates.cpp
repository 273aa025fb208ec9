#include "altfix/certificates.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "altfix/iteration.hpp"
#include "altfix/tolerances.hpp"
#include "altfix/validation.hpp"

namespace altfix {
namespace {

constexpr const char* kCompletenessNote =
    "completeness of (X,d) is assumed, not verified";

bool pair_lex_less(const PointPair& a, const PointPair& b) {
    if (Point::lex_less(a.x, b.x)) return true;
    if (Point::lex_less(b.x, a.x)) return false;
    return Point::lex_less(a.y, b.y);
}

struct PairCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool skip = false;
};

// Shared reduction: min margin over pairs, witness = lexicographically
// smallest pair attaining it (so chunked evaluation merges identically),
// verdict from the uniform tolerance rule at the witness.
CertificateReport run_pairs(
    std::string condition_id, std::map<std::string, double> params,
    const PairSet& ps,
    const std::function<PairCheck(const PointPair&)>& eval) {
    CertificateReport rep;
    rep.condition_id = std::move(condition_id);
    rep.parameters = std::move(params);
    rep.seed = ps.seed;
    rep.evidence = ps.exhaustive ? "exact (exhaustive pairs)"
                                 : "sampled evidence, not proof";

    bool have_worst = false;
    double worst = 0.0;
    for (const PointPair& p : ps.pairs) {
        const PairCheck c = eval(p);
        if (c.skip) {
            ++rep.pairs_skipped;
            continue;
        }
        ++rep.pairs_checked;
        const double margin = c.rhs - c.lhs;
        const bool better =
            !have_worst || margin < worst ||
            (margin == worst && pair_lex_less(p, rep.witness));
        if (better) {
            have_worst = true;
            worst = margin;
            rep.witness = p;
            rep.witness_lhs = c.lhs;
            rep.witness_rhs = c.rhs;
        }
    }
    if (!have_worst)
        throw std::invalid_argument(
            "certificate: no checkable pairs (all skipped)");
    rep.worst_margin = worst;
    rep.verdict = worst >= -tol_slack(rep.witness_lhs, rep.witness_rhs)
                      ? Verdict::Pass
                      : Verdict::Fail;
    rep.notes.push_back(kCompletenessNote);
    return rep;
}

void require_c05(const ComparisonFunction& f, const char* who) {
    const ValidationReport v = validate_comparison(f);
    const AxiomCheck* c05 = v.find("(c05)_subunitary");
    if (!c05 || !c05->passed)
        throw std::invalid_argument(std::string(who) +
                                    ": comparison function fails (c05) "
                                    "subunitary check on its grid");
}

}  // namespace

PairSet make_pair_set(const MetricSpace& space, std::size_t n_samples) {
    if (n_samples < 1)
        throw std::invalid_argument("make_pair_set: n_samples >= 1");
    PairSet ps;
    ps.seed = space.sampler_seed();

    if (space.is_finite()) {
        const std::size_t n = space.size();
        if (n * n <= 1'000'000) {
            ps.exhaustive = true;
            ps.pairs.reserve(n * n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    ps.pairs.push_back(
                        {Point::at_index(i), Point::at_index(j)});
        } else {
            const CounterRng rng(space.sampler_seed());
            ps.pairs.reserve(n_samples);
            for (std::size_t k = 0; k < n_samples; ++k)
                ps.pairs.push_back(
                    {Point::at_index(rng.bits(2 * k) % n),
                     Point::at_index(rng.bits(2 * k + 1) % n)});
        }
        return ps;
    }

    ps.pairs.reserve(n_samples * 2);
    for (std::size_t k = 0; k < n_samples; ++k)
        ps.pairs.push_back({space.sample(2 * k), space.sample(2 * k + 1)});

    // Diagonal lattice, corners included: reproducible boundary coverage.
    const std::size_t g = std::max<std::size_t>(
        2, static_cast<std::size_t>(
               std::ceil(std::sqrt(static_cast<double>(n_samples)))));
    std::vector<Point> lattice;
    lattice.reserve(g);
    for (std::size_t i = 0; i < g; ++i) {
        std::vector<double> c(space.dim());
        const double f =
            static_cast<double>(i) / static_cast<double>(g - 1);
        for (std::size_t j = 0; j < space.dim(); ++j)
            c[j] = space.lower()[j] +
                   (space.upper()[j] - space.lower()[j]) * f;
        lattice.push_back(Point::at(std::move(c)));
    }
    for (const Point& a : lattice)
        for (const Point& b : lattice) ps.pairs.push_back({a, b});
    return ps;
}

CertificateReport check_banach(const MetricSpace& space, const SelfMap& T,
                               double alpha, const PairSet& pairs) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument(
            "check_banach: parameter error, alpha must be in [0,1)");
    return run_pairs("(a01)", {{"alpha", alpha}}, pairs,
                     [&](const PointPair& p) {
                         const Point tx = T.apply_checked(space, p.x);
                         const Point ty = T.apply_checked(space, p.y);
                         PairCheck c;
                         c.lhs = space.distance(tx, ty);
                         c.rhs = alpha * space.distance(p.x, p.y);
                         return c;
                     });
}

CertificateReport check_banach(const MetricSpace& space, const SelfMap& T,
                               double alpha, std::size_t n_samples) {
    return check_banach(space, T, alpha, make_pair_set(space, n_samples));
}

CertificateReport check_weak_contraction(const MetricSpace& space,
                                         const SelfMap& T, double alpha,
                                         double lambda, const PairSet& pairs) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument(
            "check_weak_contraction: parameter error, alpha must be in [0,1)");
    if (!(lambda >= 0.0))
        throw std::invalid_argument(
            "check_weak_contraction: parameter error, lambda must be >= 0");
    return run_pairs("(a03)", {{"alpha", alpha}, {"lambda", lambda}}, pairs,
                     [&](const PointPair& p) {
                         const Point tx = T.apply_checked(space, p.x);
                         const Point ty = T.apply_checked(space, p.y);
                         PairCheck c;
                         c.lhs = space.distance(tx, ty);
                         c.rhs = alpha * space.distance(p.x, p.y) +
                                 lambda * space.distance(tx, p.y);
                         return c;
                     });
}

CertificateReport check_weak_contraction(const MetricSpace& space,
                                         const SelfMap& T, double alpha,
                                         double lambda,
                                         std::size_t n_samples) {
    return check_weak_contraction(space, T, alpha, lambda,
                                  make_pair_set(space, n_samples));
}

CertificateReport check_altering_contraction(const SymmetricE& es,
                                             const SelfMap& T,
                                             const ComparisonFunction& psi,
                                             const PairSet& pairs) {
    require_c05(psi, "check_altering_contraction");
    const MetricSpace& space = es.space();
    CertificateReport rep = run_pairs(
        "(c04)", {}, pairs, [&](const PointPair& p) {
            PairCheck c;
            const double d = space.distance(p.x, p.y);
            if (d <= kEpsAbs) {  // the condition quantifies over x != y
                c.skip = true;
                return c;
            }
            const Point tx = T.apply_checked(space, p.x);
            const Point ty = T.apply_checked(space, p.y);
            const double m1 = es(p.x, p.y);
            const double m2 = 0.5 * (es(p.x, tx) + es(p.y, ty));
            const double m3 = std::min(es(p.x, ty), es(tx, p.y));
            c.lhs = es(tx, ty);
            c.rhs = psi(d) * std::max({m1, m2, m3});
            return c;
        });
    for (const auto& [k, v] : psi.func().params())
        rep.parameters["psi." + k] = v;
    rep.notes.push_back("psi = " + psi.func().id() + ", phi = " +
                        es.phi().func().id());
    return rep;
}

CertificateReport check_altering_contraction(const SymmetricE& es,
                                             const SelfMap& T,
                                             const ComparisonFunction& psi,
                                             std::size_t n_samples) {
    return check_altering_contraction(es, T, psi,
                                      make_pair_set(es.space(), n_samples));
}

CertificateReport check_abc_contraction(const SymmetricE& es, const SelfMap& T,
                                        const ComparisonFunction& a,
                                        const ComparisonFunction& b,
                                        const ComparisonFunction& c,
                                        const PairSet& pairs) {
    // Theorem 4 hypothesis: the associated psi = a + 2b + c obeys (c05).
    ComparisonFunction sum_psi(
        ScalarFunc::custom("a+2b+c",
                           [&a, &b, &c](double s) {
                               return a(s) + 2.0 * b(s) + c(s);
                           }),
        a.grid());
    require_c05(sum_psi, "check_abc_contraction");
    const ValidationReport sum_rep = validate_comparison(sum_psi);

    const MetricSpace& space = es.space();
    CertificateReport rep = run_pairs(
        "(c08)", {}, pairs, [&](const PointPair& p) {
            PairCheck chk;
            const double d = space.distance(p.x, p.y);
            if (d <= kEpsAbs) {
                chk.skip = true;
                return chk;
            }
            const Point tx = T.apply_checked(space, p.x);
            const Point ty = T.apply_checked(space, p.y);
            chk.lhs = es(tx, ty);
            chk.rhs = a(d) * es(p.x, p.y) +
                      b(d) * (es(p.x, tx) + es(p.y, ty)) +
                      c(d) * std::min(es(p.x, ty), es(tx, p.y));
            return chk;
        });
    for (const AxiomCheck& chk : sum_rep.checks)
        rep.notes.push_back("psi=a+2b+c " + chk.name + ": " +
                            (chk.passed ? "pass" : "fail"));
    rep.notes.push_back("a = " + a.func().id() + ", b = " + b.func().id() +
                        ", c = " + c.func().id() + ", phi = " +
                        es.phi().func().id());
    return rep;
}

CertificateReport check_abc_contraction(const SymmetricE& es, const SelfMap& T,
                                        const ComparisonFunction& a,
                                        const ComparisonFunction& b,
                                        const ComparisonFunction& c,
                                        std::size_t n_samples) {
    return check_abc_contraction(es, T, a, b, c,
                                 make_pair_set(es.space(), n_samples));
}

CertificateReport check_theorem5(const MetricSpace& space, const SelfMap& T,
                                 double a, double b,
                                 const BoundedDecayFunction& K,
                                 const PairSet& pairs) {
    if (!(a >= 0.0 && b >= 0.0))
        throw std::invalid_argument(
            "check_theorem5: parameter error, need a, b >= 0");
    if (!(a + 2.0 * b < 1.0))
        throw std::invalid_argument(
            "check_theorem5: parameter error, need a + 2b < 1");
    if (!validate_decay(K).passed())
        throw std::invalid_argument(
            "check_theorem5: parameter error, K fails its decay grid check");

    CertificateReport rep = run_pairs(
        "(d01)", {{"a", a}, {"b", b}}, pairs, [&](const PointPair& p) {
            const Point tx = T.apply_checked(space, p.x);
            const Point ty = T.apply_checked(space, p.y);
            PairCheck c;
            c.lhs = space.distance(tx, ty);
            c.rhs = a * space.distance(p.x, p.y) +
                    b * (space.distance(p.x, tx) + space.distance(p.y, ty)) +
                    K(space.distance(tx, p.y));
            return c;
        });
    rep.parameters["lambda"] = geometric_rate(a, b);
    rep.notes.push_back("K = " + K.func().id());
    return rep;
}

CertificateReport check_theorem5(const MetricSpace& space, const SelfMap& T,
                                 double a, double b,
                                 const BoundedDecayFunction& K,
                                 std::size_t n_samples) {
    return check_theorem5(space, T, a, b, K, make_pair_set(space, n_samples));
}

}  // namespace altfix
