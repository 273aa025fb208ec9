#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "altfix/functions.hpp"
#include "altfix/metric_space.hpp"

namespace altfix {

enum class StopReason { Converged, FixedPointHit, MaxIters, Diverged };

const char* to_string(StopReason r);

// Orbits exceeding this consecutive-distance cap count as diverged.
inline constexpr double kDivergenceCap = 1e12;

struct IterationTrace {
    Point start;
    std::vector<Point> orbit;      // x_0 ... x_n
    std::vector<double> rho;       // rho_k = d(x_k, x_{k+1})
    std::vector<double> sigma;     // sigma_k = e(x_k, x_{k+1}); empty if no phi
    std::vector<double> bound;     // rate^k/(1-rate) * rho_0; empty if no rate
    StopReason stop_reason = StopReason::MaxIters;
    std::optional<Point> limit;    // set when converged or fixed-point-hit
    std::string error;             // set when the orbit left the carrier
};

// Picard orbit x_{k+1} = T(x_k), stopping on rho_k <= tol (converged),
// exact repeat (fixed-point-hit), the divergence cap or carrier exit
// (diverged), or the iteration cap.
IterationTrace picard_orbit(const MetricSpace& space, const SelfMap& T,
                            const Point& u, std::size_t max_iters, double tol);
// As above, also tracking sigma_k through the altering function.
IterationTrace picard_orbit(const SymmetricE& es, const SelfMap& T,
                            const Point& u, std::size_t max_iters, double tol);

// Fills trace.bound with rate^k/(1-rate)*d(u,Tu) for every orbit step.
void attach_bound_curve(IterationTrace& trace, double rate);

// lambda = (a+b)/(1-b), guaranteed < 1 when a + 2b < 1. Evaluated in
// extended precision so the returned double is the correctly rounded value
// of the exact rational.
double geometric_rate(double a, double b);

// lambda^n/(1-lambda) * d0.
double apriori_error_bound(double lambda, double d0, std::size_t n);

// Smallest n >= 0 with lambda^n/(1-lambda)*d0 <= eps, found by integer
// search around the logarithmic estimate and confirmed by evaluation.
std::size_t iterations_needed(double lambda, double d0, double eps);

enum class PicardVerdict {
    Picard,
    StrongPicard,
    GloballyStrongPicard,
    Inconclusive
};

const char* to_string(PicardVerdict v);

struct StartResult {
    Point start;
    StopReason stop_reason = StopReason::MaxIters;
    std::optional<Point> limit;
    bool limit_fixed = false;  // d(z, Tz) <= tol
    double fixed_residual = std::numeric_limits<double>::quiet_NaN();
};

struct PicardClassification {
    PicardVerdict verdict = PicardVerdict::Inconclusive;
    std::vector<StartResult> per_start;
    std::vector<Point> distinct_limits;       // cluster representatives
    std::vector<Point> fixed_point_estimate;  // clusters whose rep is fixed
    std::string detail;
};

// Runs one orbit per start; limits within 10*tol of an earlier limit are
// merged into its cluster so that float noise cannot fake non-uniqueness.
PicardClassification classify_picard(const MetricSpace& space, const SelfMap& T,
                                     std::span<const Point> starts,
                                     std::size_t max_iters, double tol);

}  // namespace altfix
