#include "altfix/cauchy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "altfix/tolerances.hpp"

namespace altfix {

SequencePrefix::SequencePrefix(MetricSpace space, std::vector<Point> points)
    : space_(std::move(space)), points_(std::move(points)) {
    if (points_.size() < 3)
        throw std::invalid_argument("SequencePrefix: need x_0..x_N with N >= 2");
    for (const Point& p : points_)
        if (!space_.contains(p))
            throw std::domain_error("SequencePrefix: point outside carrier");
    rho_.reserve(points_.size() - 1);
    for (std::size_t i = 0; i + 1 < points_.size(); ++i)
        rho_.push_back(space_.distance(points_[i], points_[i + 1]));
}

double SequencePrefix::dist(std::size_t i, std::size_t j) const {
    return space_.distance(points_.at(i), points_.at(j));
}

SequencePrefix harmonic_prefix(std::size_t last_index) {
    if (last_index < 2)
        throw std::invalid_argument("harmonic_prefix: need last_index >= 2");
    std::vector<Point> pts;
    pts.reserve(last_index + 1);
    double h = 0.0;
    pts.push_back(Point::at(0.0));
    for (std::size_t n = 1; n <= last_index; ++n) {
        h += 1.0 / static_cast<double>(n);
        pts.push_back(Point::at(h));
    }
    return SequencePrefix(MetricSpace::interval(0.0, h + 1.0),
                          std::move(pts));
}

SemiCauchyReport is_semi_cauchy(const SequencePrefix& seq, std::size_t window,
                                double tol) {
    if (window < 1)
        throw std::invalid_argument("is_semi_cauchy: window >= 1");
    const auto& rho = seq.rho();
    SemiCauchyReport rep;
    rep.window = std::min(window, rho.size());
    rep.tol = tol;

    rep.tail_max = 0.0;
    for (std::size_t i = rho.size() - rep.window; i < rho.size(); ++i)
        rep.tail_max = std::max(rep.tail_max, rho[i]);

    const std::size_t i1 = rho.size() / 3, i2 = 2 * rho.size() / 3;
    const auto chunk_max = [&](std::size_t lo, std::size_t hi) {
        double m = 0.0;
        for (std::size_t i = lo; i < hi; ++i) m = std::max(m, rho[i]);
        return m;
    };
    rep.third_max = {chunk_max(0, i1), chunk_max(i1, i2),
                     chunk_max(i2, rho.size())};

    bool monotone = true;
    double prev = std::numeric_limits<double>::infinity();
    const std::size_t bounds[4] = {0, i1, i2, rho.size()};
    for (int t = 0; t < 3; ++t) {
        if (bounds[t] == bounds[t + 1]) continue;  // empty third: no signal
        const double m = rep.third_max[static_cast<std::size_t>(t)];
        if (!approx_leq(m, prev)) monotone = false;
        prev = m;
    }
    rep.passed = approx_leq(rep.tail_max, tol) && monotone;
    return rep;
}

CauchyReport is_cauchy(const SequencePrefix& seq, std::size_t tail,
                       double tol) {
    if (tail < 2) throw std::invalid_argument("is_cauchy: tail >= 2");
    const std::size_t count = seq.points().size();
    const std::size_t q = count > tail ? count - tail : 0;
    CauchyReport rep;
    rep.tail = count - q;
    rep.tol = tol;
    rep.tail_pair_max = -1.0;
    for (std::size_t m = q; m < count; ++m)
        for (std::size_t n = m + 1; n < count; ++n) {
            const double d = seq.dist(m, n);
            if (d > rep.tail_pair_max) {
                rep.tail_pair_max = d;
                rep.witness_m = m;
                rep.witness_n = n;
            }
        }
    if (rep.tail_pair_max < 0.0) rep.tail_pair_max = 0.0;
    rep.passed = approx_leq(rep.tail_pair_max, tol);
    return rep;
}

RankSequenceResult extract_rank_sequences(const SequencePrefix& seq,
                                          double eta, std::size_t J) {
    if (!(eta > 0.0))
        throw std::invalid_argument("extract_rank_sequences: eta > 0");
    const std::size_t N = seq.last_index();
    const auto& rho = seq.rho();

    RankSequenceResult res;
    res.eta = eta;
    res.prefix_last = N;

    // Eq-205-style index: everything at or past j_eta has rho < eta.
    res.j_eta = 0;
    for (std::size_t k = rho.size(); k-- > 0;)
        if (rho[k] >= eta) {
            res.j_eta = k + 1;
            break;
        }

    // first_exceed[m] = smallest n > m with d(x_m, x_n) > eta (memoized;
    // kNone marks an m that admits no such n, so later j skip it in O(1)).
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    constexpr std::size_t kUnknown = static_cast<std::size_t>(-2);
    std::vector<std::size_t> first_exceed(N + 1, kUnknown);
    const auto lookup = [&](std::size_t m) {
        if (first_exceed[m] == kUnknown) {
            first_exceed[m] = kNone;
            for (std::size_t n = m + 1; n <= N; ++n)
                if (seq.dist(m, n) > eta) {
                    first_exceed[m] = n;
                    break;
                }
        }
        return first_exceed[m];
    };

    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t j = 0; j <= J; ++j) {
        std::size_t m = j;
        while (m < N && lookup(m) == kNone) ++m;
        if (m >= N || lookup(m) == kNone)
            throw extraction_error(
                j, "extract_rank_sequences: A(j) empty at j = " +
                       std::to_string(j) +
                       " (prefix too short or Cauchy at this level)");
        const std::size_t n = lookup(m);
        res.m.push_back(m);
        res.n.push_back(n);
        const double alpha = seq.dist(m, n);
        const double beta = seq.dist(m, n - 1);
        res.alpha.push_back(alpha);
        res.beta.push_back(beta);
        res.alpha_pq[0].push_back(alpha);
        res.alpha_pq[1].push_back(n + 1 <= N ? seq.dist(m, n + 1) : nan);
        res.alpha_pq[2].push_back(seq.dist(m + 1, n));
        res.alpha_pq[3].push_back(n + 1 <= N ? seq.dist(m + 1, n + 1) : nan);
        res.eq201.push_back(j <= m && m < n && alpha > eta);
        res.eq202.push_back(n - m >= 2 && approx_leq(beta, eta));
    }
    return res;
}

TrendReport verify_prop1_trends(const RankSequenceResult& res,
                                double tail_fraction, double trend_tol) {
    if (res.recorded() < 10)
        throw std::invalid_argument(
            "verify_prop1_trends: need >= 10 recorded j values");
    if (!(tail_fraction > 0.0 && tail_fraction <= 1.0))
        throw std::invalid_argument(
            "verify_prop1_trends: tail_fraction in (0,1]");

    TrendReport rep;
    rep.trend_tol = trend_tol;
    rep.tail_fraction = tail_fraction;
    rep.note =
        "finite-prefix trend diagnostics are evidence for the limit claims, "
        "not proof";

    rep.alpha_strictly_above_eta = true;
    for (double a : res.alpha)
        if (!(a > res.eta)) rep.alpha_strictly_above_eta = false;

    const std::size_t count = res.recorded();
    const auto tail_start = static_cast<std::size_t>(
        std::floor(static_cast<double>(count) * (1.0 - tail_fraction)));

    rep.tail_alpha_dev = 0.0;
    for (std::size_t j = tail_start; j < count; ++j)
        rep.tail_alpha_dev =
            std::max(rep.tail_alpha_dev, std::fabs(res.alpha[j] - res.eta));

    for (std::size_t q = 0; q < 4; ++q) {
        rep.alpha_pq_dev_curves[q].reserve(count);
        rep.tail_alpha_pq_dev[q] = 0.0;
        for (std::size_t j = 0; j < count; ++j) {
            const double v = res.alpha_pq[q][j];
            const double dev = std::isnan(v)
                                   ? std::numeric_limits<double>::quiet_NaN()
                                   : std::fabs(v - res.eta);
            rep.alpha_pq_dev_curves[q].push_back(dev);
            if (j >= tail_start && !std::isnan(dev))
                rep.tail_alpha_pq_dev[q] =
                    std::max(rep.tail_alpha_pq_dev[q], dev);
        }
    }

    rep.within_tol = rep.tail_alpha_dev <= trend_tol;
    for (double d : rep.tail_alpha_pq_dev)
        if (d > trend_tol) rep.within_tol = false;
    return rep;
}

}  // namespace altfix
