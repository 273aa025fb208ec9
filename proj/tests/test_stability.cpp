#include <doctest.h>

#include <cmath>

#include "altfix/stability.hpp"
#include "altfix/tolerances.hpp"

using namespace altfix;

namespace {

const MetricSpace kBox = MetricSpace::interval(-10.0, 10.0);

SelfMap identity_map() {
    return SelfMap::from_scalar([](double x) { return x; });
}

SelfMap affine_half() {
    return SelfMap::from_scalar([](double x) { return x / 2 + 1; });
}

}  // namespace

TEST_SUITE("stability") {

TEST_CASE("mu of the identity is zero on any ball") {
    CHECK(estimate_mu(kBox, identity_map(), Point::at(0.0), 1.0, 1000) == 0.0);
    CHECK(estimate_mu(kBox, identity_map(), Point::at(5.0), 2.0, 1000) == 0.0);
}

TEST_CASE("mu of x/2+1 on X(0,1) approaches the supremum 1.5 from below") {
    const double mu =
        estimate_mu(kBox, affine_half(), Point::at(0.0), 1.0, 100'000);
    CHECK(mu >= 1.49);
    CHECK(mu <= 1.5);
}

TEST_CASE("mu respects the banach displacement bound (1+alpha)*delta") {
    // T(x) = x/2 fixes 0; on X(0, delta), d(x,Tx) <= (1+alpha)*delta.
    const SelfMap half = SelfMap::from_scalar([](double x) { return x / 2; });
    const double alpha = 0.5, delta = 1.0;
    const double mu = estimate_mu(kBox, half, Point::at(0.0), delta, 20'000);
    CHECK(mu <= (1.0 + alpha) * delta + kEpsAbs);
}

TEST_CASE("mu never decreases when samples are appended") {
    const double a =
        estimate_mu(kBox, affine_half(), Point::at(0.0), 1.0, 100);
    const double b =
        estimate_mu(kBox, affine_half(), Point::at(0.0), 1.0, 1000);
    const double c =
        estimate_mu(kBox, affine_half(), Point::at(0.0), 1.0, 10'000);
    CHECK(a <= b);
    CHECK(b <= c);
}

TEST_CASE("mu sampling outside the carrier is a domain error") {
    CHECK_THROWS_AS(
        estimate_mu(kBox, affine_half(), Point::at(20.0), 1.0, 10),
        std::domain_error);
}

TEST_CASE("local-global bound arithmetic") {
    CHECK(local_global_bound(0.5, 1.5, 10) == 1.5 * 0.001953125);
    CHECK(local_global_bound(0.5, 0.0, 3) == 0.0);
    CHECK(local_global_bound(0.5, 1.5, 0) == 3.0);
    CHECK_THROWS_AS(local_global_bound(1.0, 1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(local_global_bound(0.5, -1.0, 1), std::invalid_argument);
}

TEST_CASE("identity map probes unstable: every start is its own limit") {
    const StabilityVerdict v = hyers_ulam_probe(kBox, identity_map(),
                                                Point::at(0.0), 1.0, 10,
                                                1000, 1e-9);
    CHECK(v.verdict == StabilityOutcome::Unstable);
    CHECK(v.fix_estimate.size() >= 2);
    CHECK(v.distinct_limits >= 2);
    CHECK(v.mu_estimate == 0.0);
}

TEST_CASE("x/2 probes stable with the bound holding per trial") {
    const SelfMap half = SelfMap::from_scalar([](double x) { return x / 2; });
    const StabilityVerdict v = hyers_ulam_probe(
        kBox, half, Point::at(0.0), 1.0, 10, 100000, 1e-9, 0.5);
    CHECK(v.verdict == StabilityOutcome::Stable);
    CHECK(v.distinct_limits == 1);
    for (const TrialRecord& t : v.trials) {
        CHECK(t.bound_checked);
        CHECK(t.bound_satisfied);
    }
}

TEST_CASE("diverging perturbed orbits leave the probe inconclusive") {
    const SelfMap dbl = SelfMap::from_scalar([](double x) { return 2 * x; });
    const StabilityVerdict v = hyers_ulam_probe(kBox, dbl, Point::at(0.0),
                                                1.0, 5, 1000, 1e-9);
    CHECK(v.verdict == StabilityOutcome::Inconclusive);
}

TEST_CASE("probe parameter validation") {
    CHECK_THROWS_AS(hyers_ulam_probe(kBox, identity_map(), Point::at(0.0),
                                     1.0, 1, 10, 1e-9),
                    std::invalid_argument);
    CHECK_THROWS_AS(hyers_ulam_probe(kBox, identity_map(), Point::at(0.0),
                                     -1.0, 5, 10, 1e-9),
                    std::invalid_argument);
}

TEST_CASE("probe on a finite carrier") {
    // two fixed points a and b, plus c mapping to a
    const MetricSpace space = MetricSpace::finite(
        {"a", "b", "c"}, {0, 4, 1, 4, 0, 3, 1, 3, 0});
    const SelfMap map = SelfMap::from_table({0, 1, 0});
    const StabilityVerdict v = hyers_ulam_probe(space, map,
                                                Point::at_index(0), 10.0, 5,
                                                100, 1e-9);
    CHECK(v.verdict == StabilityOutcome::Unstable);
    CHECK(v.fix_estimate.size() == 2);
}

}  // TEST_SUITE
