#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "altfix/metric_space.hpp"

namespace altfix {

// A named scalar function R+ -> R+ with an echoable parameter set.
class ScalarFunc {
public:
    ScalarFunc() = default;
    ScalarFunc(std::string id, std::map<std::string, double> params,
               std::function<double(double)> fn);

    static ScalarFunc custom(std::string id, std::function<double(double)> fn);

    double operator()(double t) const;
    const std::string& id() const { return id_; }
    const std::map<std::string, double>& params() const { return params_; }
    bool valid() const { return static_cast<bool>(fn_); }

private:
    std::string id_;
    std::map<std::string, double> params_;
    std::function<double(double)> fn_;
};

// Built-in altering candidates: continuous, increasing, phi(t)=0 iff t=0.
namespace altering {
ScalarFunc identity();
ScalarFunc power(double p);  // t^p, p > 0
ScalarFunc log1p();          // ln(1+t)
ScalarFunc ratio();          // t/(1+t)
}  // namespace altering

// Built-in comparison candidates (subunitary / right Boyd-Wong material).
namespace comparison {
ScalarFunc constant(double alpha);
ScalarFunc inverse_linear();  // 1/(1+s)
ScalarFunc exp_decay(double c, double clip = 1.0 - 1e-6);  // min(c*e^-s, clip)
}  // namespace comparison

// Built-in decay candidates: K(0)=0 and K(t)->0 as t->0.
namespace decay {
ScalarFunc linear(double lambda);     // lambda*t
ScalarFunc sqrt(double lambda);       // lambda*sqrt(t)
ScalarFunc ratio(double lambda);      // lambda*t/(1+t)
}  // namespace decay

// Uniformly spaced grid of n points on [0, t_max].
std::vector<double> uniform_grid(double t_max, std::size_t n = 1001);
// As above but excluding 0 (grids for laws stated on t > 0).
std::vector<double> positive_grid(double t_max, std::size_t n = 1000);

// The altering function phi together with its validation grid
// (grid: sorted ascending, starts at 0).
class AlteringFunction {
public:
    AlteringFunction(ScalarFunc f, std::vector<double> grid);
    static AlteringFunction with_default_grid(ScalarFunc f,
                                              double diam_estimate);

    double operator()(double t) const { return f_(t); }
    const ScalarFunc& func() const { return f_; }
    const std::vector<double>& grid() const { return grid_; }

private:
    ScalarFunc f_;
    std::vector<double> grid_;
};

// The comparison function psi with a strictly-positive validation grid.
class ComparisonFunction {
public:
    ComparisonFunction(ScalarFunc f, std::vector<double> grid);
    static ComparisonFunction with_default_grid(ScalarFunc f,
                                                double diam_estimate);

    double operator()(double s) const { return f_(s); }
    const ScalarFunc& func() const { return f_; }
    const std::vector<double>& grid() const { return grid_; }

private:
    ScalarFunc f_;
    std::vector<double> grid_;
};

// K with K(0)=0 and K(t)->0 as t->0; the decay law is checked on a fixed
// grid t in {1e-1, ..., 1e-8} by validate_decay.
class BoundedDecayFunction {
public:
    explicit BoundedDecayFunction(ScalarFunc f);

    double operator()(double t) const { return f_(t); }
    const ScalarFunc& func() const { return f_; }
    static const std::vector<double>& decay_grid();

private:
    ScalarFunc f_;
};

// The symmetric e(x,y) = phi(d(x,y)): symmetric and reflexive sufficient,
// in general not triangular.
class SymmetricE {
public:
    SymmetricE(MetricSpace space, AlteringFunction phi);

    double operator()(const Point& x, const Point& y) const;
    const MetricSpace& space() const { return space_; }
    const AlteringFunction& phi() const { return phi_; }

private:
    MetricSpace space_;
    AlteringFunction phi_;
};

struct MFunctionals {
    double m1;  // e(x,y)
    double m2;  // (1/2)[e(x,Tx) + e(y,Ty)]
    double m3;  // min{e(x,Ty), e(Tx,y)}
    double m;   // max{m1, m2, m3}
};

MFunctionals m_functionals(const SymmetricE& es, const SelfMap& T,
                           const Point& x, const Point& y);

}  // namespace altfix
