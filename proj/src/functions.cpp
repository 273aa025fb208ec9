#include "altfix/functions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace altfix {

ScalarFunc::ScalarFunc(std::string id, std::map<std::string, double> params,
                       std::function<double(double)> fn)
    : id_(std::move(id)), params_(std::move(params)), fn_(std::move(fn)) {}

ScalarFunc ScalarFunc::custom(std::string id, std::function<double(double)> fn) {
    return ScalarFunc(std::move(id), {}, std::move(fn));
}

double ScalarFunc::operator()(double t) const {
    if (!fn_) throw std::logic_error("ScalarFunc: empty function");
    return fn_(t);
}

namespace altering {

ScalarFunc identity() {
    return ScalarFunc("identity", {}, [](double t) { return t; });
}

ScalarFunc power(double p) {
    if (!(p > 0.0)) throw std::invalid_argument("altering::power: need p > 0");
    return ScalarFunc("power", {{"p", p}},
                      [p](double t) { return std::pow(t, p); });
}

ScalarFunc log1p() {
    return ScalarFunc("log1p", {}, [](double t) { return std::log1p(t); });
}

ScalarFunc ratio() {
    return ScalarFunc("ratio", {}, [](double t) { return t / (1.0 + t); });
}

}  // namespace altering

namespace comparison {

ScalarFunc constant(double alpha) {
    return ScalarFunc("constant", {{"alpha", alpha}},
                      [alpha](double) { return alpha; });
}

ScalarFunc inverse_linear() {
    return ScalarFunc("inverse_linear", {},
                      [](double s) { return 1.0 / (1.0 + s); });
}

ScalarFunc exp_decay(double c, double clip) {
    return ScalarFunc("exp_decay", {{"c", c}, {"clip", clip}},
                      [c, clip](double s) {
                          return std::min(c * std::exp(-s), clip);
                      });
}

}  // namespace comparison

namespace decay {

ScalarFunc linear(double lambda) {
    return ScalarFunc("linear", {{"lambda", lambda}},
                      [lambda](double t) { return lambda * t; });
}

ScalarFunc sqrt(double lambda) {
    return ScalarFunc("sqrt", {{"lambda", lambda}},
                      [lambda](double t) { return lambda * std::sqrt(t); });
}

ScalarFunc ratio(double lambda) {
    return ScalarFunc("ratio", {{"lambda", lambda}},
                      [lambda](double t) { return lambda * t / (1.0 + t); });
}

}  // namespace decay

std::vector<double> uniform_grid(double t_max, std::size_t n) {
    if (n < 2 || !(t_max > 0.0))
        throw std::invalid_argument("uniform_grid: need n >= 2 and t_max > 0");
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = t_max * static_cast<double>(i) / static_cast<double>(n - 1);
    g[0] = 0.0;
    return g;
}

std::vector<double> positive_grid(double t_max, std::size_t n) {
    if (n < 1 || !(t_max > 0.0))
        throw std::invalid_argument("positive_grid: need n >= 1 and t_max > 0");
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = t_max * static_cast<double>(i + 1) / static_cast<double>(n);
    return g;
}

AlteringFunction::AlteringFunction(ScalarFunc f, std::vector<double> grid)
    : f_(std::move(f)), grid_(std::move(grid)) {
    if (grid_.empty() || grid_.front() != 0.0 ||
        !std::is_sorted(grid_.begin(), grid_.end()))
        throw std::invalid_argument(
            "AlteringFunction: grid must be ascending and start at 0");
}

AlteringFunction AlteringFunction::with_default_grid(ScalarFunc f,
                                                     double diam_estimate) {
    const double t_max = diam_estimate > 0.0 ? 10.0 * diam_estimate : 10.0;
    return AlteringFunction(std::move(f), uniform_grid(t_max, 1001));
}

ComparisonFunction::ComparisonFunction(ScalarFunc f, std::vector<double> grid)
    : f_(std::move(f)), grid_(std::move(grid)) {
    if (grid_.empty() || !(grid_.front() > 0.0) ||
        !std::is_sorted(grid_.begin(), grid_.end()))
        throw std::invalid_argument(
            "ComparisonFunction: grid must be ascending and strictly positive");
}

ComparisonFunction ComparisonFunction::with_default_grid(ScalarFunc f,
                                                         double diam_estimate) {
    const double t_max = diam_estimate > 0.0 ? 10.0 * diam_estimate : 10.0;
    return ComparisonFunction(std::move(f), positive_grid(t_max, 1000));
}

BoundedDecayFunction::BoundedDecayFunction(ScalarFunc f) : f_(std::move(f)) {}

const std::vector<double>& BoundedDecayFunction::decay_grid() {
    static const std::vector<double> grid = {1e-1, 1e-2, 1e-3, 1e-4,
                                             1e-5, 1e-6, 1e-7, 1e-8};
    return grid;
}

SymmetricE::SymmetricE(MetricSpace space, AlteringFunction phi)
    : space_(std::move(space)), phi_(std::move(phi)) {}

double SymmetricE::operator()(const Point& x, const Point& y) const {
    // Plain composition; no extra rounding step.
    return phi_(space_.distance(x, y));
}

MFunctionals m_functionals(const SymmetricE& es, const SelfMap& T,
                           const Point& x, const Point& y) {
    const Point tx = T.apply_checked(es.space(), x);
    const Point ty = T.apply_checked(es.space(), y);
    MFunctionals r;
    r.m1 = es(x, y);
    r.m2 = 0.5 * (es(x, tx) + es(y, ty));
    r.m3 = std::min(es(x, ty), es(tx, y));
    r.m = std::max({r.m1, r.m2, r.m3});
    return r;
}

}  // namespace altfix
