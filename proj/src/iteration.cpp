#include "altfix/iteration.hpp"

#include <cmath>
#include <stdexcept>

#include "altfix/tolerances.hpp"

namespace altfix {

const char* to_string(StopReason r) {
    switch (r) {
        case StopReason::Converged: return "converged";
        case StopReason::FixedPointHit: return "fixed-point-hit";
        case StopReason::MaxIters: return "max-iters";
        case StopReason::Diverged: return "diverged";
    }
    return "?";
}

const char* to_string(PicardVerdict v) {
    switch (v) {
        case PicardVerdict::Picard: return "picard";
        case PicardVerdict::StrongPicard: return "strong-picard";
        case PicardVerdict::GloballyStrongPicard:
            return "globally-strong-picard";
        case PicardVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

IterationTrace run_orbit(const MetricSpace& space, const SelfMap& T,
                         const Point& u, std::size_t max_iters, double tol,
                         const AlteringFunction* phi) {
    if (max_iters < 1)
        throw std::invalid_argument("picard_orbit: max_iters >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("picard_orbit: tol > 0");
    if (!space.contains(u))
        throw std::domain_error("picard_orbit: start outside carrier");

    IterationTrace tr;
    tr.start = u;
    tr.orbit.push_back(u);
    tr.stop_reason = StopReason::MaxIters;

    for (std::size_t k = 0; k < max_iters; ++k) {
        const Point& x = tr.orbit.back();
        const Point next = T.apply(space, x);
        if (!space.contains(next)) {
            tr.stop_reason = StopReason::Diverged;
            tr.error = "orbit left carrier at step " + std::to_string(k + 1) +
                       " from " + space.describe_point(x);
            return tr;
        }
        if (next == x) {
            // Exact repeat. At the very start nothing is appended (the
            // orbit is the single fixed point); later the repeat is kept so
            // the recorded tail distance is 0.
            if (k > 0) {
                tr.rho.push_back(0.0);
                if (phi) tr.sigma.push_back((*phi)(0.0));
                tr.orbit.push_back(next);
            }
            tr.stop_reason = StopReason::FixedPointHit;
            tr.limit = x;
            return tr;
        }
        const double step = space.distance(x, next);
        tr.rho.push_back(step);
        if (phi) tr.sigma.push_back((*phi)(step));
        tr.orbit.push_back(next);
        if (step > kDivergenceCap) {
            tr.stop_reason = StopReason::Diverged;
            return tr;
        }
        if (step <= tol) {
            tr.stop_reason = StopReason::Converged;
            tr.limit = next;
            return tr;
        }
    }
    return tr;
}

}  // namespace

IterationTrace picard_orbit(const MetricSpace& space, const SelfMap& T,
                            const Point& u, std::size_t max_iters,
                            double tol) {
    return run_orbit(space, T, u, max_iters, tol, nullptr);
}

IterationTrace picard_orbit(const SymmetricE& es, const SelfMap& T,
                            const Point& u, std::size_t max_iters,
                            double tol) {
    return run_orbit(es.space(), T, u, max_iters, tol, &es.phi());
}

void attach_bound_curve(IterationTrace& trace, double rate) {
    if (!(rate >= 0.0 && rate < 1.0))
        throw std::invalid_argument(
            "attach_bound_curve: parameter error, rate must be in [0,1)");
    const double d0 = trace.rho.empty() ? 0.0 : trace.rho.front();
    trace.bound.resize(trace.orbit.size());
    for (std::size_t k = 0; k < trace.bound.size(); ++k)
        trace.bound[k] = apriori_error_bound(rate, d0, k);
}

double geometric_rate(double a, double b) {
    if (!(a >= 0.0 && b >= 0.0))
        throw std::invalid_argument(
            "geometric_rate: parameter error, need a, b >= 0");
    if (!(a + 2.0 * b < 1.0))
        throw std::invalid_argument(
            "geometric_rate: parameter error, need a + 2b < 1");
    return static_cast<double>((static_cast<long double>(a) + b) /
                               (1.0L - static_cast<long double>(b)));
}

double apriori_error_bound(double lambda, double d0, std::size_t n) {
    if (!(lambda >= 0.0 && lambda < 1.0))
        throw std::invalid_argument(
            "apriori_error_bound: parameter error, lambda must be in [0,1)");
    if (!(d0 >= 0.0))
        throw std::invalid_argument(
            "apriori_error_bound: parameter error, d0 must be >= 0");
    return std::pow(lambda, static_cast<double>(n)) / (1.0 - lambda) * d0;
}

std::size_t iterations_needed(double lambda, double d0, double eps) {
    if (!(lambda > 0.0 && lambda < 1.0))
        throw std::invalid_argument(
            "iterations_needed: parameter error, lambda must be in (0,1)");
    if (!(d0 > 0.0))
        throw std::invalid_argument(
            "iterations_needed: parameter error, d0 must be > 0");
    if (!(eps > 0.0))
        throw std::invalid_argument(
            "iterations_needed: parameter error, eps must be > 0");

    const auto bound = [&](std::size_t n) {
        return apriori_error_bound(lambda, d0, n);
    };
    if (bound(0) <= eps) return 0;

    // Logarithmic estimate, then exact integer search around it.
    const double est =
        std::log(eps * (1.0 - lambda) / d0) / std::log(lambda);
    std::size_t n = est > 0.0 ? static_cast<std::size_t>(est) : 0;
    while (bound(n) > eps) ++n;
    while (n > 0 && bound(n - 1) <= eps) --n;
    return n;
}

PicardClassification classify_picard(const MetricSpace& space,
                                     const SelfMap& T,
                                     std::span<const Point> starts,
                                     std::size_t max_iters, double tol) {
    if (starts.empty())
        throw std::invalid_argument("classify_picard: starts nonempty");

    PicardClassification out;
    const double cluster_tol = 10.0 * tol;

    bool all_converged = true;
    bool all_fixed = true;
    for (const Point& u : starts) {
        const IterationTrace tr = picard_orbit(space, T, u, max_iters, tol);
        StartResult r;
        r.start = u;
        r.stop_reason = tr.stop_reason;
        r.limit = tr.limit;
        if (tr.limit) {
            const Point tz = T.apply(space, *tr.limit);
            r.fixed_residual = space.contains(tz)
                                   ? space.distance(*tr.limit, tz)
                                   : std::numeric_limits<double>::infinity();
            r.limit_fixed = r.fixed_residual <= tol;
            all_fixed = all_fixed && r.limit_fixed;

            bool merged = false;
            for (const Point& rep : out.distinct_limits)
                if (space.distance(rep, *tr.limit) <= cluster_tol) {
                    merged = true;
                    break;
                }
            if (!merged) {
                out.distinct_limits.push_back(*tr.limit);
                if (r.limit_fixed)
                    out.fixed_point_estimate.push_back(*tr.limit);
            }
        } else {
            all_converged = false;
            if (out.detail.empty())
                out.detail = "no limit from start " +
                             space.describe_point(u) + " (" +
                             to_string(tr.stop_reason) + ")";
        }
        out.per_start.push_back(std::move(r));
    }

    if (!all_converged) {
        out.verdict = PicardVerdict::Inconclusive;
    } else if (!all_fixed) {
        out.verdict = PicardVerdict::Picard;
    } else if (out.distinct_limits.size() == 1) {
        out.verdict = PicardVerdict::GloballyStrongPicard;
    } else {
        out.verdict = PicardVerdict::StrongPicard;
        out.detail = std::to_string(out.distinct_limits.size()) +
                     " distinct limits";
    }
    return out;
}

}  // namespace altfix
