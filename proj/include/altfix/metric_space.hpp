#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "altfix/rng.hpp"

namespace altfix {

enum class CarrierKind { Finite, Box };
enum class BoxMetric { Euclidean, MaxCoordinate };

// A carrier point: an index into a finite space, or coordinates in a box.
class Point {
public:
    Point() = default;

    static Point at_index(std::size_t i);
    static Point at(std::vector<double> coords);
    static Point at(double x);

    bool is_index() const { return index_.has_value(); }
    std::size_t index() const;
    const std::vector<double>& coords() const;
    double scalar() const;  // 1-d convenience

    // Exact equality (used for fixed-point-hit detection).
    friend bool operator==(const Point& a, const Point& b) {
        return a.index_ == b.index_ && a.coords_ == b.coords_;
    }

    // Lexicographic order; used to pick deterministic witnesses.
    static bool lex_less(const Point& a, const Point& b);

private:
    std::optional<std::size_t> index_;
    std::vector<double> coords_;
};

// A metric space: either a finite point set with a distance table, or an
// axis-aligned box in R^n with a formula metric. Immutable after
// construction; the table's metric axioms are checked by the validators,
// not here, so that broken tables remain constructible for testing.
class MetricSpace {
public:
    static MetricSpace finite(std::vector<std::string> labels,
                              std::vector<double> table,  // row-major n*n
                              std::uint64_t sampler_seed = 42);
    static MetricSpace box(std::size_t dim, std::vector<double> lo,
                           std::vector<double> hi,
                           BoxMetric metric = BoxMetric::Euclidean,
                           std::uint64_t sampler_seed = 42);
    // 1-d Euclidean box.
    static MetricSpace interval(double lo, double hi,
                                std::uint64_t sampler_seed = 42);

    CarrierKind kind() const { return kind_; }
    bool is_finite() const { return kind_ == CarrierKind::Finite; }

    std::size_t size() const;  // finite carriers only
    const std::vector<std::string>& labels() const { return labels_; }
    double table_entry(std::size_t i, std::size_t j) const;

    std::size_t dim() const { return dim_; }
    const std::vector<double>& lower() const { return lo_; }
    const std::vector<double>& upper() const { return hi_; }
    BoxMetric box_metric() const { return metric_; }

    std::uint64_t sampler_seed() const { return sampler_seed_; }
    MetricSpace with_seed(std::uint64_t seed) const;

    bool contains(const Point& p) const;
    // Throws std::domain_error when either point is outside the carrier.
    double distance(const Point& x, const Point& y) const;

    // Deterministic point sample; pure function of (sampler_seed, counter).
    Point sample(std::uint64_t counter) const;

    // Box: distance of the corner pair; finite: max table entry.
    double diameter_estimate() const;

    std::string describe_point(const Point& p) const;

private:
    MetricSpace() = default;

    CarrierKind kind_ = CarrierKind::Box;
    std::vector<std::string> labels_;
    std::vector<double> table_;
    std::size_t dim_ = 0;
    std::vector<double> lo_, hi_;
    BoxMetric metric_ = BoxMetric::Euclidean;
    std::uint64_t sampler_seed_ = 42;
};

// The operator T: a finite index table or a coordinate formula. The image
// is not forced back into the carrier; callers decide whether an escaping
// image is a domain error (certificates) or a divergence (orbits).
class SelfMap {
public:
    SelfMap() = default;

    static SelfMap from_table(std::vector<std::size_t> images,
                              std::string name = "T");
    static SelfMap from_function(
        std::function<std::vector<double>(const std::vector<double>&)> fn,
        std::string name = "T");
    static SelfMap from_scalar(std::function<double(double)> fn,
                               std::string name = "T");

    // Raw image of x. Throws std::domain_error when x itself is outside the
    // carrier.
    Point apply(const MetricSpace& space, const Point& x) const;
    // As above, but also throws when the image leaves the carrier.
    Point apply_checked(const MetricSpace& space, const Point& x) const;

    const std::string& name() const { return name_; }
    const std::map<std::string, double>& parameters() const { return params_; }
    void set_parameter(const std::string& key, double value) {
        params_[key] = value;
    }

private:
    std::string name_ = "T";
    std::vector<std::size_t> images_;
    std::function<std::vector<double>(const std::vector<double>&)> fn_;
    std::map<std::string, double> params_;
    bool tabular_ = false;
};

}  // namespace altfix
