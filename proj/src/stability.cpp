#include "altfix/stability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "altfix/tolerances.hpp"

namespace altfix {

const char* to_string(StabilityOutcome v) {
    switch (v) {
        case StabilityOutcome::Stable: return "stable";
        case StabilityOutcome::Unstable: return "unstable";
        case StabilityOutcome::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

// Deterministic sampler of the open ball X(u0, delta): draws from the
// delta-cube around u0 clipped to the box, rejecting points at distance
// >= delta. estimate_mu and the probe share this stream, so the probe's
// trial starts are exactly the first accepted mu samples.
class BallSampler {
public:
    BallSampler(const MetricSpace& space, const Point& u0, double delta)
        : space_(space), u0_(u0), delta_(delta) {
        if (!(delta > 0.0))
            throw std::invalid_argument("ball sampler: delta > 0");
        if (!space.contains(u0))
            throw std::domain_error("ball sampler: u0 outside carrier");
        if (!space.is_finite()) {
            lo_.resize(space.dim());
            hi_.resize(space.dim());
            for (std::size_t j = 0; j < space.dim(); ++j) {
                lo_[j] = std::max(space.lower()[j], u0.coords()[j] - delta);
                hi_[j] = std::min(space.upper()[j], u0.coords()[j] + delta);
            }
        }
    }

    // The i-th accepted ball point; throws std::domain_error when the ball
    // (beyond u0 itself) cannot be hit.
    Point next() {
        if (space_.is_finite()) {
            // Finite carrier: round-robin over the ball's member points.
            std::vector<std::size_t> members;
            for (std::size_t i = 0; i < space_.size(); ++i)
                if (space_.distance(u0_, Point::at_index(i)) < delta_)
                    members.push_back(i);
            if (members.empty())
                throw std::domain_error("ball sampler: empty ball");
            return Point::at_index(members[counter_++ % members.size()]);
        }
        const CounterRng rng(space_.sampler_seed());
        for (std::uint64_t attempts = 0; attempts < 1'000'000; ++attempts) {
            std::vector<double> c(space_.dim());
            for (std::size_t j = 0; j < space_.dim(); ++j)
                c[j] = rng.uniform(counter_ * space_.dim() + j, lo_[j], hi_[j]);
            ++counter_;
            Point p = Point::at(std::move(c));
            if (space_.distance(u0_, p) < delta_) return p;
        }
        throw std::domain_error(
            "ball sampler: ball has empty intersection with the carrier");
    }

private:
    const MetricSpace& space_;
    Point u0_;
    double delta_;
    std::vector<double> lo_, hi_;
    std::uint64_t counter_ = 0;
};

}  // namespace

double estimate_mu(const MetricSpace& space, const SelfMap& T, const Point& u0,
                   double delta, std::size_t n_samples) {
    BallSampler ball(space, u0, delta);
    const auto displacement = [&](const Point& x) {
        const Point tx = T.apply(space, x);
        if (!space.contains(tx))
            throw std::domain_error("estimate_mu: image leaves carrier");
        return space.distance(x, tx);
    };
    double mu = displacement(u0);
    if (space.is_finite()) {
        for (std::size_t i = 0; i < space.size(); ++i) {
            const Point p = Point::at_index(i);
            if (space.distance(u0, p) < delta)
                mu = std::max(mu, displacement(p));
        }
        return mu;
    }
    for (std::size_t i = 0; i < n_samples; ++i)
        mu = std::max(mu, displacement(ball.next()));
    return mu;
}

double local_global_bound(double lambda, double mu, std::size_t n) {
    if (!(mu >= 0.0))
        throw std::invalid_argument(
            "local_global_bound: parameter error, mu must be >= 0");
    return apriori_error_bound(lambda, mu, n);
}

StabilityVerdict hyers_ulam_probe(const MetricSpace& space, const SelfMap& T,
                                  const Point& u0, double delta,
                                  std::size_t trials, std::size_t max_iters,
                                  double tol, std::optional<double> rate,
                                  std::optional<double> mu) {
    if (trials < 2)
        throw std::invalid_argument("hyers_ulam_probe: trials >= 2");

    StabilityVerdict out;
    out.delta = delta;
    out.mu_estimate = estimate_mu(space, T, u0, delta, 10'000);
    out.notes.push_back("mu is a sampled lower estimate of the supremum");
    const double mu_used = mu.value_or(out.mu_estimate);

    BallSampler ball(space, u0, delta);
    std::vector<Point> starts;
    starts.push_back(u0);
    for (std::size_t i = 0; i < trials; ++i) starts.push_back(ball.next());

    const double cluster_tol = 10.0 * tol;
    std::vector<Point> clusters;
    bool all_converged = true;

    for (const Point& v0 : starts) {
        const IterationTrace tr = picard_orbit(space, T, v0, max_iters, tol);
        TrialRecord rec;
        rec.start = v0;
        rec.stop_reason = tr.stop_reason;
        rec.limit = tr.limit;
        if (tr.limit) {
            const Point tz = T.apply(space, *tr.limit);
            rec.fixed_residual = space.contains(tz)
                                     ? space.distance(*tr.limit, tz)
                                     : std::numeric_limits<double>::infinity();
            rec.limit_fixed = rec.fixed_residual <= tol;

            bool merged = false;
            for (const Point& rep : clusters)
                if (space.distance(rep, *tr.limit) <= cluster_tol) {
                    merged = true;
                    break;
                }
            if (!merged) {
                clusters.push_back(*tr.limit);
                if (rec.limit_fixed) out.fix_estimate.push_back(*tr.limit);
            }

            if (rate) {
                rec.bound_checked = true;
                for (std::size_t k = 0; k < tr.orbit.size(); ++k) {
                    const double observed =
                        space.distance(tr.orbit[k], *tr.limit);
                    const double allowed =
                        local_global_bound(*rate, mu_used, k) + tol;
                    rec.worst_bound_slack =
                        std::min(rec.worst_bound_slack, allowed - observed);
                    if (observed > allowed) rec.bound_satisfied = false;
                }
            }
        } else {
            all_converged = false;
        }
        out.trials.push_back(std::move(rec));
    }

    out.distinct_limits = clusters.size();
    if (!all_converged) {
        out.verdict = StabilityOutcome::Inconclusive;
        out.notes.push_back("non-convergent trials present");
    } else if (clusters.size() == 1) {
        out.verdict = StabilityOutcome::Stable;
    } else if (out.fix_estimate.size() >= 2) {
        out.verdict = StabilityOutcome::Unstable;
    } else {
        out.verdict = StabilityOutcome::Inconclusive;
        out.notes.push_back(
            "multiple limit clusters but fewer than 2 confirmed fixed points");
    }
    return out;
}

}  // namespace altfix
