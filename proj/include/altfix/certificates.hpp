#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "altfix/functions.hpp"
#include "altfix/metric_space.hpp"

namespace altfix {

struct PointPair {
    Point x, y;
};

// The pair set a checker runs over, with provenance for the report label.
struct PairSet {
    std::vector<PointPair> pairs;
    bool exhaustive = false;
    std::uint64_t seed = 0;
};

// Standard pair generation: finite spaces enumerate all ordered pairs while
// |X|^2 <= 1e6 (else sample); boxes draw n_samples seeded pairs plus every
// ordered pair of a ceil(sqrt(n_samples))-point lattice along the box
// diagonal, so the corners always participate.
PairSet make_pair_set(const MetricSpace& space, std::size_t n_samples);

enum class Verdict { Pass, Fail };

// One checked contractive condition: worst margin (min over pairs of
// RHS - LHS), the witness pair attaining it, and enough echo to reproduce.
struct CertificateReport {
    std::string condition_id;  // "(a01)", "(a03)", "(c04)", "(c08)", "(d01)"
    Verdict verdict = Verdict::Fail;
    double worst_margin = 0.0;
    PointPair witness;
    double witness_lhs = 0.0;
    double witness_rhs = 0.0;
    std::size_t pairs_checked = 0;
    std::size_t pairs_skipped = 0;  // x == y exclusions for (c04)/(c08)
    std::map<std::string, double> parameters;
    std::uint64_t seed = 0;
    std::string evidence;  // "exact (exhaustive pairs)" or sampled disclaimer
    std::vector<std::string> notes;

    bool passed() const { return verdict == Verdict::Pass; }
};

// (a01): d(Tx,Ty) <= alpha * d(x,y), alpha in [0,1).
CertificateReport check_banach(const MetricSpace& space, const SelfMap& T,
                               double alpha, const PairSet& pairs);
CertificateReport check_banach(const MetricSpace& space, const SelfMap& T,
                               double alpha, std::size_t n_samples);

// (a03): d(Tx,Ty) <= alpha * d(x,y) + lambda * d(Tx,y).
CertificateReport check_weak_contraction(const MetricSpace& space,
                                         const SelfMap& T, double alpha,
                                         double lambda, const PairSet& pairs);
CertificateReport check_weak_contraction(const MetricSpace& space,
                                         const SelfMap& T, double alpha,
                                         double lambda, std::size_t n_samples);

// (c04): e(Tx,Ty) <= psi(d(x,y)) * M(x,y) over pairs with x != y.
// Throws std::invalid_argument when psi fails the (c05) pointwise check.
CertificateReport check_altering_contraction(const SymmetricE& es,
                                             const SelfMap& T,
                                             const ComparisonFunction& psi,
                                             const PairSet& pairs);
CertificateReport check_altering_contraction(const SymmetricE& es,
                                             const SelfMap& T,
                                             const ComparisonFunction& psi,
                                             std::size_t n_samples);

// (c08): e(Tx,Ty) <= a(d)e(x,y) + b(d)[e(x,Tx)+e(y,Ty)]
//                  + c(d)min{e(x,Ty),e(Tx,y)} over pairs with x != y.
// Requires the associated psi = a+2b+c to pass (c05) on the grid.
CertificateReport check_abc_contraction(const SymmetricE& es, const SelfMap& T,
                                        const ComparisonFunction& a,
                                        const ComparisonFunction& b,
                                        const ComparisonFunction& c,
                                        const PairSet& pairs);
CertificateReport check_abc_contraction(const SymmetricE& es, const SelfMap& T,
                                        const ComparisonFunction& a,
                                        const ComparisonFunction& b,
                                        const ComparisonFunction& c,
                                        std::size_t n_samples);

// (d01)+(d02): d(Tx,Ty) <= a d(x,y) + b[d(x,Tx)+d(y,Ty)] + K(d(Tx,y)),
// with a + 2b < 1 and K decaying to K(0) = 0.
CertificateReport check_theorem5(const MetricSpace& space, const SelfMap& T,
                                 double a, double b,
                                 const BoundedDecayFunction& K,
                                 const PairSet& pairs);
CertificateReport check_theorem5(const MetricSpace& space, const SelfMap& T,
                                 double a, double b,
                                 const BoundedDecayFunction& K,
                                 std::size_t n_samples);

}  // namespace altfix
