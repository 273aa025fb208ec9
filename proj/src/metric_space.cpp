#include "altfix/metric_space.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace altfix {

Point Point::at_index(std::size_t i) {
    Point p;
    p.index_ = i;
    return p;
}

Point Point::at(std::vector<double> coords) {
    Point p;
    p.coords_ = std::move(coords);
    return p;
}

Point Point::at(double x) { return at(std::vector<double>{x}); }

std::size_t Point::index() const {
    if (!index_) throw std::logic_error("Point: not a finite-carrier point");
    return *index_;
}

const std::vector<double>& Point::coords() const {
    if (index_) throw std::logic_error("Point: not a box-carrier point");
    return coords_;
}

double Point::scalar() const {
    const auto& c = coords();
    if (c.size() != 1) throw std::logic_error("Point: not one-dimensional");
    return c[0];
}

bool Point::lex_less(const Point& a, const Point& b) {
    if (a.index_ && b.index_) return *a.index_ < *b.index_;
    if (a.index_ != b.index_) return a.index_.has_value();  // indices first
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(),
                                        b.coords_.begin(), b.coords_.end());
}

MetricSpace MetricSpace::finite(std::vector<std::string> labels,
                                std::vector<double> table,
                                std::uint64_t sampler_seed) {
    const std::size_t n = labels.size();
    if (n == 0) throw std::invalid_argument("finite space: empty point set");
    if (table.size() != n * n)
        throw std::invalid_argument("finite space: table must be n*n");
    MetricSpace s;
    s.kind_ = CarrierKind::Finite;
    s.labels_ = std::move(labels);
    s.table_ = std::move(table);
    s.sampler_seed_ = sampler_seed;
    return s;
}

MetricSpace MetricSpace::box(std::size_t dim, std::vector<double> lo,
                             std::vector<double> hi, BoxMetric metric,
                             std::uint64_t sampler_seed) {
    if (dim == 0) throw std::invalid_argument("box space: dim must be >= 1");
    if (lo.size() != dim || hi.size() != dim)
        throw std::invalid_argument("box space: bounds must have `dim` entries");
    for (std::size_t j = 0; j < dim; ++j)
        if (!(lo[j] < hi[j]))
            throw std::invalid_argument("box space: need lo < hi per coordinate");
    MetricSpace s;
    s.kind_ = CarrierKind::Box;
    s.dim_ = dim;
    s.lo_ = std::move(lo);
    s.hi_ = std::move(hi);
    s.metric_ = metric;
    s.sampler_seed_ = sampler_seed;
    return s;
}

MetricSpace MetricSpace::interval(double lo, double hi,
                                  std::uint64_t sampler_seed) {
    return box(1, {lo}, {hi}, BoxMetric::Euclidean, sampler_seed);
}

std::size_t MetricSpace::size() const {
    if (kind_ != CarrierKind::Finite)
        throw std::logic_error("size(): box carrier has no point count");
    return labels_.size();
}

double MetricSpace::table_entry(std::size_t i, std::size_t j) const {
    return table_.at(i * size() + j);
}

MetricSpace MetricSpace::with_seed(std::uint64_t seed) const {
    MetricSpace s = *this;
    s.sampler_seed_ = seed;
    return s;
}

bool MetricSpace::contains(const Point& p) const {
    if (kind_ == CarrierKind::Finite)
        return p.is_index() && p.index() < labels_.size();
    if (p.is_index()) return false;
    const auto& c = p.coords();
    if (c.size() != dim_) return false;
    for (std::size_t j = 0; j < dim_; ++j)
        if (!(lo_[j] <= c[j] && c[j] <= hi_[j])) return false;
    return true;
}

double MetricSpace::distance(const Point& x, const Point& y) const {
    if (!contains(x) || !contains(y))
        throw std::domain_error("distance: point outside carrier");
    if (kind_ == CarrierKind::Finite)
        return table_[x.index() * labels_.size() + y.index()];
    const auto& a = x.coords();
    const auto& b = y.coords();
    if (metric_ == BoxMetric::Euclidean) {
        double acc = 0.0;
        for (std::size_t j = 0; j < dim_; ++j) {
            const double d = a[j] - b[j];
            acc += d * d;
        }
        return std::sqrt(acc);
    }
    double m = 0.0;
    for (std::size_t j = 0; j < dim_; ++j)
        m = std::max(m, std::fabs(a[j] - b[j]));
    return m;
}

Point MetricSpace::sample(std::uint64_t counter) const {
    const CounterRng rng(sampler_seed_);
    if (kind_ == CarrierKind::Finite)
        return Point::at_index(rng.bits(counter) % labels_.size());
    std::vector<double> c(dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        c[j] = rng.uniform(counter * dim_ + j, lo_[j], hi_[j]);
    return Point::at(std::move(c));
}

double MetricSpace::diameter_estimate() const {
    if (kind_ == CarrierKind::Finite) {
        double m = 0.0;
        for (double d : table_) m = std::max(m, d);
        return m;
    }
    return distance(Point::at(lo_), Point::at(hi_));
}

std::string MetricSpace::describe_point(const Point& p) const {
    if (p.is_index()) {
        const std::size_t i = p.index();
        return i < labels_.size() ? labels_[i] : "#" + std::to_string(i);
    }
    std::string out = "(";
    char buf[40];
    const auto& c = p.coords();
    for (std::size_t j = 0; j < c.size(); ++j) {
        std::snprintf(buf, sizeof buf, "%.17g", c[j]);
        if (j) out += ", ";
        out += buf;
    }
    return out + ")";
}

SelfMap SelfMap::from_table(std::vector<std::size_t> images, std::string name) {
    SelfMap m;
    m.tabular_ = true;
    m.images_ = std::move(images);
    m.name_ = std::move(name);
    for (std::size_t i : m.images_)
        if (i >= m.images_.size())
            throw std::invalid_argument("SelfMap table: image index out of range");
    return m;
}

SelfMap SelfMap::from_function(
    std::function<std::vector<double>(const std::vector<double>&)> fn,
    std::string name) {
    SelfMap m;
    m.fn_ = std::move(fn);
    m.name_ = std::move(name);
    return m;
}

SelfMap SelfMap::from_scalar(std::function<double(double)> fn,
                             std::string name) {
    return from_function(
        [f = std::move(fn)](const std::vector<double>& c) {
            return std::vector<double>{f(c.at(0))};
        },
        std::move(name));
}

Point SelfMap::apply(const MetricSpace& space, const Point& x) const {
    if (!space.contains(x))
        throw std::domain_error("SelfMap: argument outside carrier");
    if (space.is_finite()) {
        if (!tabular_ || images_.size() != space.size())
            throw std::logic_error("SelfMap: table does not match finite carrier");
        return Point::at_index(images_[x.index()]);
    }
    if (!fn_) throw std::logic_error("SelfMap: no formula attached");
    return Point::at(fn_(x.coords()));
}

Point SelfMap::apply_checked(const MetricSpace& space, const Point& x) const {
    Point y = apply(space, x);
    if (!space.contains(y))
        throw std::domain_error("SelfMap: image leaves carrier at " +
                                space.describe_point(x));
    return y;
}

}  // namespace altfix
