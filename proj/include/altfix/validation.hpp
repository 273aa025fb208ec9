#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "altfix/functions.hpp"
#include "altfix/metric_space.hpp"

namespace altfix {

struct AxiomCheck {
    std::string name;
    bool passed = true;
    // Min over samples of the check's slack; negative means violated.
    double worst_margin = std::numeric_limits<double>::infinity();
    std::string witness;  // populated on failure (and for worst case)
};

struct ValidationReport {
    std::string subject;
    std::vector<AxiomCheck> checks;
    std::uint64_t seed = 0;
    std::size_t n_samples = 0;
    bool exhaustive = false;
    std::vector<std::string> notes;

    bool passed() const;
    const AxiomCheck* find(const std::string& name) const;
};

// Checks d(x,x)=0, symmetry, the triangle inequality, and (finite spaces)
// sufficiency d(x,y)>0 for x!=y. Finite spaces are enumerated exhaustively
// while cheap; box spaces are sampled deterministically from the space seed.
ValidationReport validate_metric_axioms(const MetricSpace& space,
                                        std::size_t n_samples);

// Checks phi(0)=0, strict monotonicity, positivity for t>0, and a
// shrinking-step continuity proxy, all on the attached grid.
ValidationReport validate_altering(const AlteringFunction& phi);

// Checks the subunitary law psi(s)<1 pointwise and estimates the right
// limsup at each grid point from shrinking windows (s, s+w]; the latter
// verdict is flagged as heuristic.
ValidationReport validate_comparison(const ComparisonFunction& psi);

// Checks K(0)=0 and monotone decay toward 0 on the fixed grid.
ValidationReport validate_decay(const BoundedDecayFunction& k);

}  // namespace altfix
