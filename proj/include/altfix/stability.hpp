#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "altfix/iteration.hpp"
#include "altfix/metric_space.hpp"

namespace altfix {

enum class StabilityOutcome { Stable, Unstable, Inconclusive };

const char* to_string(StabilityOutcome v);

struct TrialRecord {
    Point start;  // v_0 (trial 0 is u_0 itself)
    StopReason stop_reason = StopReason::MaxIters;
    std::optional<Point> limit;
    double fixed_residual = std::numeric_limits<double>::quiet_NaN();
    bool limit_fixed = false;
    // Filled when a rate is supplied: d(T^n v0, z) <= rate^n/(1-rate)*mu + tol
    // along the orbit, against the trial's own limit.
    bool bound_checked = false;
    bool bound_satisfied = true;
    double worst_bound_slack = std::numeric_limits<double>::infinity();
};

struct StabilityVerdict {
    StabilityOutcome verdict = StabilityOutcome::Inconclusive;
    std::vector<Point> fix_estimate;  // confirmed fixed cluster reps
    std::vector<TrialRecord> trials;
    double delta = 0.0;
    double mu_estimate = std::numeric_limits<double>::quiet_NaN();
    std::size_t distinct_limits = 0;
    std::vector<std::string> notes;
};

// Sampled lower estimate of mu(u0) = sup{d(x,Tx) : x in X(u0, delta)},
// taken over n_samples ball points plus u0 itself. Appending samples can
// only raise the estimate (max aggregation over a fixed counter stream).
double estimate_mu(const MetricSpace& space, const SelfMap& T, const Point& u0,
                   double delta, std::size_t n_samples);

// lambda^n/(1-lambda) * mu.
double local_global_bound(double lambda, double mu, std::size_t n);

// Runs orbits from u0 and `trials` perturbed starts in the open ball
// X(u0, delta), clusters the limits, and reports the stable/unstable
// dichotomy: unstable needs >= 2 confirmed fixed points, stable needs all
// limits in one cluster. Non-convergent trials force inconclusive.
StabilityVerdict hyers_ulam_probe(const MetricSpace& space, const SelfMap& T,
                                  const Point& u0, double delta,
                                  std::size_t trials, std::size_t max_iters,
                                  double tol,
                                  std::optional<double> rate = {},
                                  std::optional<double> mu = {});

}  // namespace altfix
