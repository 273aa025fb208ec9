#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "altfix/problem_spec.hpp"

namespace altfix {

struct SectionResult {
    std::string kind;
    std::string status;  // "pass" | "fail" | "inconclusive"
    nlohmann::ordered_json body;
    double wall_time_s = 0.0;
    std::vector<std::string> csv_files;  // relative to the output directory
};

struct ExperimentReport {
    nlohmann::ordered_json spec_echo;  // post-default canonical echo
    std::vector<SectionResult> sections;

    // 0 all pass, 1 any fail, 2 inconclusive only.
    int exit_code() const;
    std::string overall_status() const;
    nlohmann::ordered_json to_json() const;
};

// Executes the spec's experiment blocks in declaration order, writing trace
// and rank-sequence CSV files into out_dir. Module errors become section
// diagnostics; only spec-level domain errors abort.
ExperimentReport run_experiments(const ProblemSpec& spec,
                                 const std::filesystem::path& out_dir);

// Removes every wall_time_s key, recursively; reports are byte-identical
// across runs of the same spec after this.
nlohmann::ordered_json strip_wall_times(nlohmann::ordered_json j);

// Scalar formatting shared with the CSV writers: 17 significant digits.
std::string format_scalar(double v);

}  // namespace altfix
