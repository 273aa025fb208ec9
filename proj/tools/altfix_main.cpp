#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "altfix/report.hpp"
#include "altfix/version.hpp"

namespace {

struct Options {
    std::string spec_path;
    std::string out_dir = ".";
    std::string format = "json";
    bool quiet = false;
    bool seed_given = false;
    std::uint64_t seed = 0;
};

const std::map<std::string, std::vector<std::string>>& command_kinds() {
    static const std::map<std::string, std::vector<std::string>> kinds = {
        {"verify", {"banach", "weak", "altering", "abc", "theorem5"}},
        {"iterate", {"iterate"}},
        {"classify", {"classify"}},
        {"cauchy", {"cauchy"}},
        {"stability", {"stability"}},
        {"run", {}},  // empty = everything
    };
    return kinds;
}

int run_command(const std::string& command, const Options& opt) {
    std::ifstream in(opt.spec_path);
    if (!in) {
        std::cerr << "error: cannot open spec file '" << opt.spec_path
                  << "'\n";
        return 3;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    altfix::ProblemSpec spec;
    try {
        spec = altfix::parse_problem_spec(buf.str());
    } catch (const altfix::spec_error& e) {
        std::cerr << "spec error: " << opt.spec_path << ": " << e.what()
                  << "\n";
        return 3;
    }

    // Seed precedence: spec file < ALTFIX_SEED < --seed.
    if (const char* env = std::getenv("ALTFIX_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') spec.seed = v;
    }
    if (opt.seed_given) spec.seed = opt.seed;

    const auto& keep = command_kinds().at(command);
    if (!keep.empty()) {
        std::vector<altfix::ExperimentDecl> filtered;
        for (const auto& e : spec.experiments)
            if (std::find(keep.begin(), keep.end(), e.kind) != keep.end())
                filtered.push_back(e);
        spec.experiments = std::move(filtered);
    }
    if (spec.experiments.empty()) {
        std::cerr << "spec error: no experiments for subcommand '" << command
                  << "'\n";
        return 3;
    }

    altfix::ExperimentReport rep;
    try {
        rep = altfix::run_experiments(spec, opt.out_dir);
    } catch (const altfix::spec_error& e) {
        std::cerr << "spec error: " << opt.spec_path << ": " << e.what()
                  << "\n";
        return 3;
    }

    const std::filesystem::path report_path =
        std::filesystem::path(opt.out_dir) / "report.json";
    std::ofstream out(report_path);
    out << rep.to_json().dump(2) << "\n";

    if (!opt.quiet) {
        for (std::size_t i = 0; i < rep.sections.size(); ++i) {
            const auto& s = rep.sections[i];
            std::string tag = s.status;
            for (char& c : tag) c = static_cast<char>(std::toupper(c));
            std::printf("[%s] %zu %s\n", tag.c_str(), i, s.kind.c_str());
        }
        std::printf("overall: %s (report: %s)\n", rep.overall_status().c_str(),
                    report_path.string().c_str());
    }
    return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"altfix: fixed-point contraction certificates, Picard "
                 "orbits, and stability probes over problem-spec files"};
    app.set_version_flag("--version", std::string(altfix::kArtifactVersion));
    app.require_subcommand(1);

    Options opt;
    std::string chosen;
    for (const auto& [name, kinds] : command_kinds()) {
        CLI::App* sub = app.add_subcommand(
            name, name == "run" ? "run every experiment in the spec"
                                : "run the spec's " + name + " experiments");
        sub->add_option("--spec", opt.spec_path, "problem-spec file")
            ->required();
        sub->add_option("--seed", opt.seed, "sampler seed override")
            ->each([&opt](const std::string&) { opt.seed_given = true; });
        sub->add_option("--out", opt.out_dir, "output directory");
        sub->add_option("--format", opt.format, "report format")
            ->check(CLI::IsMember({"json"}));
        sub->add_flag("--quiet", opt.quiet, "suppress the per-section lines");
        sub->callback([&chosen, name = name]() { chosen = name; });
    }

    CLI11_PARSE(app, argc, argv);
    return run_command(chosen, opt);
}
