#include "altfix/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "altfix/tolerances.hpp"

namespace altfix {
namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

bool lex_less_points(const std::vector<Point>& a, const std::vector<Point>& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (Point::lex_less(a[i], b[i])) return true;
        if (Point::lex_less(b[i], a[i])) return false;
    }
    return a.size() < b.size();
}

// Worst-case reducer shared by all validators: min margin, ties broken by
// the lexicographically smallest witness, so chunked/parallel evaluation
// merges to the same result.
struct Worst {
    double margin = std::numeric_limits<double>::infinity();
    double slack = kEpsAbs;  // tolerance at the worst sample
    std::vector<Point> witness;

    void update(double m, std::vector<Point> w, double s = kEpsAbs) {
        if (m < margin || (m == margin && lex_less_points(w, witness))) {
            margin = m;
            slack = s;
            witness = std::move(w);
        }
    }
};

std::string describe_witness(const MetricSpace& space,
                             const std::vector<Point>& pts) {
    std::string out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out += ", ";
        out += space.describe_point(pts[i]);
    }
    return out;
}

}  // namespace

bool ValidationReport::passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

const AxiomCheck* ValidationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

ValidationReport validate_metric_axioms(const MetricSpace& space,
                                        std::size_t n_samples) {
    if (n_samples < 1)
        throw std::invalid_argument("validate_metric_axioms: n_samples >= 1");

    ValidationReport rep;
    rep.subject = "metric_axioms";
    rep.seed = space.sampler_seed();
    rep.n_samples = n_samples;

    Worst reflexivity, symmetry, triangle, sufficiency;

    if (space.is_finite()) {
        const std::size_t n = space.size();
        rep.exhaustive = n * n <= 1'000'000;
        const auto d = [&](std::size_t i, std::size_t j) {
            return space.table_entry(i, j);
        };
        for (std::size_t i = 0; i < n; ++i)
            reflexivity.update(-std::fabs(d(i, i)), {Point::at_index(i)});

        if (rep.exhaustive) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    symmetry.update(-std::fabs(d(i, j) - d(j, i)),
                                    {Point::at_index(i), Point::at_index(j)});
                    if (i != j)
                        sufficiency.update(d(i, j), {Point::at_index(i),
                                                     Point::at_index(j)});
                }
        } else {
            const CounterRng rng(space.sampler_seed());
            for (std::size_t k = 0; k < n_samples; ++k) {
                const std::size_t i = rng.bits(2 * k) % n;
                const std::size_t j = rng.bits(2 * k + 1) % n;
                symmetry.update(-std::fabs(d(i, j) - d(j, i)),
                                {Point::at_index(i), Point::at_index(j)});
                if (i != j)
                    sufficiency.update(d(i, j),
                                       {Point::at_index(i), Point::at_index(j)});
            }
        }

        const auto check_triple = [&](std::size_t i, std::size_t j,
                                      std::size_t k) {
            const double lhs = d(i, k), rhs = d(i, j) + d(j, k);
            triangle.update(rhs - lhs,
                            {Point::at_index(i), Point::at_index(j),
                             Point::at_index(k)},
                            tol_slack(lhs, rhs));
        };
        if (n * n * n <= 1'000'000) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) check_triple(i, j, k);
        } else {
            const CounterRng rng(space.sampler_seed() + 1);
            for (std::size_t s = 0; s < n_samples; ++s)
                check_triple(rng.bits(3 * s) % n, rng.bits(3 * s + 1) % n,
                             rng.bits(3 * s + 2) % n);
        }
    } else {
        // Disjoint counter ranges keep the three sample streams independent.
        for (std::size_t k = 0; k < n_samples; ++k) {
            const Point x = space.sample(k);
            reflexivity.update(-std::fabs(space.distance(x, x)), {x});
        }
        for (std::size_t k = 0; k < n_samples; ++k) {
            const Point x = space.sample(n_samples + 2 * k);
            const Point y = space.sample(n_samples + 2 * k + 1);
            symmetry.update(-std::fabs(space.distance(x, y) -
                                       space.distance(y, x)),
                            {x, y});
        }
        for (std::size_t k = 0; k < n_samples; ++k) {
            const Point x = space.sample(3 * n_samples + 3 * k);
            const Point y = space.sample(3 * n_samples + 3 * k + 1);
            const Point z = space.sample(3 * n_samples + 3 * k + 2);
            const double lhs = space.distance(x, z);
            const double rhs = space.distance(x, y) + space.distance(y, z);
            triangle.update(rhs - lhs, {x, y, z}, tol_slack(lhs, rhs));
        }
        rep.notes.push_back(
            "sufficiency d(x,y)>0 is checked on tabled pairs of finite "
            "spaces only");
    }

    const auto push = [&](const std::string& name, const Worst& w,
                          bool strict) {
        AxiomCheck c;
        c.name = name;
        c.worst_margin = w.margin;
        c.passed = strict ? w.margin > 0.0 : w.margin >= -kEpsAbs;
        if (std::isinf(w.margin)) c.passed = true;  // nothing checked
        c.witness = describe_witness(space, w.witness);
        rep.checks.push_back(std::move(c));
    };

    push("reflexivity", reflexivity, false);
    push("symmetry", symmetry, false);
    {
        AxiomCheck c;
        c.name = "triangle";
        c.worst_margin = triangle.margin;
        c.passed = std::isinf(triangle.margin) ||
                   triangle.margin >= -triangle.slack;
        c.witness = describe_witness(space, triangle.witness);
        rep.checks.push_back(std::move(c));
    }
    if (space.is_finite()) push("sufficiency", sufficiency, true);

    return rep;
}

ValidationReport validate_altering(const AlteringFunction& phi) {
    const auto& grid = phi.grid();
    ValidationReport rep;
    rep.subject = "altering(" + phi.func().id() + ")";
    rep.n_samples = grid.size();
    rep.exhaustive = true;

    {
        AxiomCheck c;
        c.name = "phi(0)=0";
        const double v = phi(0.0);
        c.worst_margin = -std::fabs(v);
        c.passed = approx_zero(v);
        if (!c.passed) c.witness = "phi(0) = " + fmt(v);
        rep.checks.push_back(std::move(c));
    }
    {
        AxiomCheck c;
        c.name = "strictly_increasing";
        c.worst_margin = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
            if (!(grid[i] < grid[i + 1])) continue;
            const double step = phi(grid[i + 1]) - phi(grid[i]);
            if (step < c.worst_margin) {
                c.worst_margin = step;
                c.witness = "t = " + fmt(grid[i]) + " .. " + fmt(grid[i + 1]);
            }
        }
        c.passed = c.worst_margin > 0.0;
        rep.checks.push_back(std::move(c));
    }
    {
        AxiomCheck c;
        c.name = "positive_for_t>0";
        c.worst_margin = std::numeric_limits<double>::infinity();
        for (double t : grid) {
            if (!(t > 0.0)) continue;
            const double v = phi(t);
            if (v < c.worst_margin) {
                c.worst_margin = v;
                c.witness = "t = " + fmt(t);
            }
        }
        c.passed = c.worst_margin > 0.0;
        rep.checks.push_back(std::move(c));
    }
    {
        // Continuity proxy: |phi(t+h)-phi(t)| must shrink as h shrinks.
        // A jump keeps the difference pinned at the jump size for every h.
        AxiomCheck c;
        c.name = "continuity_proxy";
        const double t_max = grid.back() > 0.0 ? grid.back() : 1.0;
        const double h1 = 1e-2 * t_max, h3 = 1e-4 * t_max;
        c.worst_margin = std::numeric_limits<double>::infinity();
        const std::size_t step = std::max<std::size_t>(1, grid.size() / 16);
        for (std::size_t i = 0; i < grid.size(); i += step) {
            const double t = grid[i];
            const double d1 = std::fabs(phi(t + h1) - phi(t));
            const double d3 = std::fabs(phi(t + h3) - phi(t));
            const double allowance = std::max(kEpsAbs, 0.5 * d1);
            const double margin = allowance - d3;
            if (margin < c.worst_margin) {
                c.worst_margin = margin;
                c.witness = "t = " + fmt(t);
            }
        }
        c.passed = c.worst_margin >= 0.0;
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

ValidationReport validate_comparison(const ComparisonFunction& psi) {
    const auto& grid = psi.grid();
    ValidationReport rep;
    rep.subject = "comparison(" + psi.func().id() + ")";
    rep.n_samples = grid.size();
    rep.exhaustive = true;

    {
        AxiomCheck c;
        c.name = "(c05)_subunitary";
        c.worst_margin = std::numeric_limits<double>::infinity();
        for (double s : grid) {
            const double margin = 1.0 - psi(s);
            if (margin < c.worst_margin) {
                c.worst_margin = margin;
                c.witness = "s = " + fmt(s);
            }
        }
        c.passed = c.worst_margin > 0.0;
        rep.checks.push_back(std::move(c));
    }
    {
        // Right limsup estimate: max of psi over the shrinking windows
        // (s, s+w], w in {1e-2, 1e-3, 1e-4}; the smallest window decides.
        AxiomCheck c;
        c.name = "(c06)_right_boyd_wong";
        constexpr double windows[] = {1e-2, 1e-3, 1e-4};
        constexpr int kProbes = 16;
        c.worst_margin = std::numeric_limits<double>::infinity();
        for (double s : grid) {
            double estimate = 0.0;
            for (double w : windows) {
                double window_max = -std::numeric_limits<double>::infinity();
                for (int k = 1; k <= kProbes; ++k)
                    window_max = std::max(
                        window_max, psi(s + w * k / kProbes));
                estimate = window_max;  // smallest window evaluated last
            }
            const double margin = (1.0 - 1e-9) - estimate;
            if (margin < c.worst_margin) {
                c.worst_margin = margin;
                c.witness = "s = " + fmt(s);
            }
        }
        c.passed = c.worst_margin >= 0.0;
        rep.checks.push_back(std::move(c));
    }
    rep.notes.push_back(
        "(c06) verdict is a heuristic window estimate of the right limsup, "
        "not a proof");
    return rep;
}

ValidationReport validate_decay(const BoundedDecayFunction& k) {
    ValidationReport rep;
    rep.subject = "decay(" + k.func().id() + ")";
    const auto& grid = BoundedDecayFunction::decay_grid();
    rep.n_samples = grid.size();
    rep.exhaustive = true;

    {
        AxiomCheck c;
        c.name = "K(0)=0";
        const double v = k(0.0);
        c.worst_margin = -std::fabs(v);
        c.passed = approx_zero(v);
        if (!c.passed) c.witness = "K(0) = " + fmt(v);
        rep.checks.push_back(std::move(c));
    }
    {
        AxiomCheck c;
        c.name = "nonnegative";
        c.worst_margin = std::numeric_limits<double>::infinity();
        for (double t : grid) {
            const double v = k(t);
            if (v < c.worst_margin) {
                c.worst_margin = v;
                c.witness = "t = " + fmt(t);
            }
        }
        c.passed = c.worst_margin >= -kEpsAbs;
        rep.checks.push_back(std::move(c));
    }
    {
        AxiomCheck c;
        c.name = "monotone_decay";
        c.worst_margin = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
            const double hi = k(grid[i]), lo = k(grid[i + 1]);
            const double margin = hi - lo;
            if (margin < c.worst_margin) {
                c.worst_margin = margin;
                c.witness = "t = " + fmt(grid[i + 1]) + " .. " + fmt(grid[i]);
            }
        }
        c.passed = c.worst_margin >= -tol_slack(c.worst_margin, 0.0);
        rep.checks.push_back(std::move(c));
    }
    {
        AxiomCheck c;
        c.name = "limit_to_zero";
        const double tail = k(grid.back());
        const double threshold =
            std::max(kEpsAbs, 1e-3 * std::max(1.0, k(grid.front())));
        c.worst_margin = threshold - tail;
        c.passed = c.worst_margin >= 0.0;
        if (!c.passed)
            c.witness = "K(" + fmt(grid.back()) + ") = " + fmt(tail);
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

}  // namespace altfix
