#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "altfix/expression.hpp"
#include "altfix/metric_space.hpp"

namespace altfix {

struct SpaceDecl {
    CarrierKind kind = CarrierKind::Box;
    // box form
    std::size_t dim = 1;
    std::vector<double> lo, hi;
    std::string metric = "euclid";  // euclid | max
    // finite form
    std::vector<std::string> point_labels;
    std::vector<double> table;  // row-major
};

struct MapDecl {
    std::string name = "T";
    std::vector<expr::Expression> components;  // box carrier
    std::vector<std::size_t> images;           // finite carrier
};

struct FuncDecl {
    std::string name;
    std::string var;  // "t" (altering/decay) or "s" (comparison)
    expr::Expression body;
};

// One experiment line; argument values are canonicalized at parse time so
// that to_text() round-trips byte-identically.
struct ExperimentDecl {
    std::string kind;
    std::map<std::string, std::string> args;
    std::size_t line = 0;
};

struct ProblemSpec {
    SpaceDecl space;
    std::optional<MapDecl> map;
    std::map<std::string, FuncDecl> altering_decls;
    std::map<std::string, FuncDecl> comparison_decls;
    std::map<std::string, FuncDecl> decay_decls;
    std::vector<ExperimentDecl> experiments;
    std::uint64_t seed = 42;
    double tol = 1e-9;
    std::uint64_t max_iters = 1'000'000;
    std::uint64_t n_samples = 10'000;

    // Canonical form: reparsing it yields an identical structure and an
    // identical canonical form again.
    std::string to_text() const;
};

class spec_error : public std::runtime_error {
public:
    spec_error(std::size_t line, std::size_t column, const std::string& msg);
    std::size_t line;
    std::size_t column;
};

// Strict parser for the versioned line grammar ("altfix-spec v1"): unknown
// directives and keys are rejected, references must be declared, parameter
// ranges are enforced, and defaults are injected so the result always
// carries seed and tolerances.
ProblemSpec parse_problem_spec(const std::string& text);

// Instantiations used by the experiment runner.
MetricSpace build_space(const ProblemSpec& spec);
SelfMap build_map(const ProblemSpec& spec);
Point parse_point(const ProblemSpec& spec, const std::string& text);

}  // namespace altfix
