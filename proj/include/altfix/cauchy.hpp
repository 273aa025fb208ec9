#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "altfix/metric_space.hpp"

namespace altfix {

// A finite prefix x_0 ... x_N (N >= 2) of a sequence in a metric space.
class SequencePrefix {
public:
    SequencePrefix(MetricSpace space, std::vector<Point> points);

    const MetricSpace& space() const { return space_; }
    const std::vector<Point>& points() const { return points_; }
    std::size_t last_index() const { return points_.size() - 1; }

    double dist(std::size_t i, std::size_t j) const;
    // Consecutive distances rho_n = d(x_n, x_{n+1}), n = 0 .. N-1.
    const std::vector<double>& rho() const { return rho_; }

private:
    MetricSpace space_;
    std::vector<Point> points_;
    std::vector<double> rho_;
};

// Builtin generator: harmonic partial sums H_0 = 0, H_n = sum_{k<=n} 1/k on
// a 1-d box wide enough to hold the prefix. Semi-Cauchy but not Cauchy.
SequencePrefix harmonic_prefix(std::size_t last_index);

struct SemiCauchyReport {
    bool passed = false;
    double tail_max = 0.0;  // max rho over the last `window` entries
    std::array<double, 3> third_max{};  // windowed maxima across thirds
    std::size_t window = 0;
    double tol = 0.0;
};

// rho_n -> 0 proxy: the last `window` values stay <= tol and the windowed
// max does not increase across thirds of the prefix.
SemiCauchyReport is_semi_cauchy(const SequencePrefix& seq, std::size_t window,
                                double tol);

struct CauchyReport {
    bool passed = false;
    double tail_pair_max = 0.0;  // max d(x_m,x_n) over pairs in the tail
    std::size_t witness_m = 0, witness_n = 0;
    std::size_t tail = 0;
    double tol = 0.0;
};

// d(x_m, x_n) <= tol for all q <= m < n restricted to the last `tail`
// entries of the prefix.
CauchyReport is_cauchy(const SequencePrefix& seq, std::size_t tail, double tol);

class extraction_error : public std::runtime_error {
public:
    extraction_error(std::size_t failing_j, const std::string& msg)
        : std::runtime_error(msg), failing_j(failing_j) {}
    std::size_t failing_j;
};

// The rank sequences m(j), n(j) with their diagnostics: alpha(j), beta(j),
// the four shifted distances alpha_pq(j) = d(x_{m(j)+p}, x_{n(j)+q}), and
// the per-j flags for the two displayed properties. alpha_pq entries that
// would index past the prefix are NaN.
struct RankSequenceResult {
    double eta = 0.0;
    std::size_t j_eta = 0;  // first index after the last rho >= eta
    std::vector<std::size_t> m, n;
    std::vector<double> alpha, beta;
    std::array<std::vector<double>, 4> alpha_pq;  // (0,0),(0,1),(1,0),(1,1)
    std::vector<bool> eq201, eq202;
    std::size_t prefix_last = 0;

    std::size_t recorded() const { return m.size(); }
};

// For each j <= J: A(j) = {(m,n): j <= m < n <= N, d(x_m,x_n) > eta},
// m(j) = min Dom A(j), n(j) = min {n : (m(j),n) in A(j)}. Throws
// extraction_error naming the first j whose A(j) is empty.
RankSequenceResult extract_rank_sequences(const SequencePrefix& seq,
                                          double eta, std::size_t J);

struct TrendReport {
    bool alpha_strictly_above_eta = false;     // Eq-203-style: alpha(j) > eta
    double tail_alpha_dev = 0.0;               // max |alpha(j)-eta| on tail
    std::array<double, 4> tail_alpha_pq_dev{};
    std::array<std::vector<double>, 4> alpha_pq_dev_curves;
    bool within_tol = false;
    double trend_tol = 0.0;
    double tail_fraction = 0.0;
    std::string note;  // finite-prefix evidence disclaimer
};

// Trend diagnostics for the limit claims: deviations |alpha(j)-eta| and
// |alpha_pq(j)-eta| over the trailing fraction of recorded j values.
// Requires >= 10 recorded entries.
TrendReport verify_prop1_trends(const RankSequenceResult& res,
                                double tail_fraction,
                                double trend_tol = 1e-3);

}  // namespace altfix
