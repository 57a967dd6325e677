// Command-line front end: generate | sweep | report.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "sfnet/config.hpp"
#include "sfnet/errors.hpp"
#include "sfnet/io.hpp"
#include "sfnet/report.hpp"
#include "sfnet/sweep.hpp"

namespace {

constexpr int kExitParameter = 1;
constexpr int kExitIo = 2;
constexpr int kExitPartialSweep = 3;

// Raw flag values; a flag left empty does not override the config file.
struct Flags {
    std::string config;
    std::string n0, m, p, attack, eta, seed, replicas, out, exports;
    std::string mode_selection, removal;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--config", config, "key = value config file (flags override it)");
        cmd.add_option("--n0", n0, "network size before the attack");
        cmd.add_option("--m", m, "links per new node");
        cmd.add_option("--p", p, "probability of popularity-driven attachment");
        cmd.add_option("--attack", attack, "central | peripheral | general | none");
        cmd.add_option("--eta", eta, "attack strength, fraction of nodes removed");
        cmd.add_option("--seed", seed, "master seed");
        cmd.add_option("--replicas", replicas, "replicas per configuration");
        cmd.add_option("--out", out, "output directory");
        cmd.add_option("--mode-selection", mode_selection, "per_node | per_link");
        cmd.add_option("--removal", removal, "sequential | batch");
    }

    sfnet::ConfigMap merged() const {
        sfnet::ConfigMap map = config.empty() ? sfnet::ConfigMap{} : sfnet::load_config_file(config);
        auto put = [&map](const char* key, const std::string& value) {
            if (!value.empty()) map[key] = value;
        };
        put("n0", n0);
        put("m", m);
        put("p", p);
        put("attack", attack);
        put("eta", eta);
        put("seed", seed);
        put("replicas", replicas);
        put("out", out);
        put("export", exports);
        put("mode_selection", mode_selection);
        put("removal", removal);
        return map;
    }
};

void print_report(const sfnet::RunResult& r) {
    std::cout << sfnet::io::format_report_row(r.gen, r.attack, r.report) << '\n';
}

int cmd_generate(const Flags& flags) {
    const auto map = flags.merged();
    sfnet::RunConfig cfg;
    sfnet::apply_config(map, cfg);
    const auto results = sfnet::run_single(cfg);
    std::cout << sfnet::io::kReportHeader << '\n';
    for (const auto& r : results) print_report(r);
    return 0;
}

int cmd_sweep(const Flags& flags, const std::string& preset) {
    const auto map = flags.merged();
    std::vector<sfnet::SweepGrid> grids;
    if (!preset.empty()) {
        if (preset != "direction") throw sfnet::ParameterError("unknown preset '" + preset + "' (expected direction)");
        std::size_t replicas = 20;
        std::uint64_t seed = 1;
        if (auto it = map.find("replicas"); it != map.end()) replicas = sfnet::parse_count_list(it->second).at(0);
        if (auto it = map.find("seed"); it != map.end()) seed = sfnet::parse_count_list(it->second).at(0);
        grids = sfnet::direction_grids(replicas, seed);
    } else {
        sfnet::SweepGrid grid;
        sfnet::apply_config(map, grid);
        grids.push_back(grid);
    }
    const std::filesystem::path out = map.count("out") ? map.at("out") : "sweep_out";
    std::error_code ec;
    std::filesystem::create_directories(out, ec);
    if (ec) throw sfnet::IoError("cannot create output directory " + out.string() + ": " + ec.message());

    const auto rows = sfnet::run_sweep(grids);
    sfnet::io::write_file(out / "results.csv", [&](std::ostream& os) { sfnet::write_results(os, rows); });
    sfnet::io::write_file(out / "aggregate.csv", [&](std::ostream& os) { sfnet::write_aggregate(os, rows); });

    std::size_t failed = 0;
    for (const auto& r : rows) {
        if (!r.ok) {
            ++failed;
            std::cerr << fmt::format("cell {} replica {}: {}\n", r.cell, r.replica, r.error);
        }
    }
    std::cout << fmt::format("{} runs, {} failed; results in {}\n", rows.size(), failed, out.string());
    return failed == 0 ? 0 : kExitPartialSweep;
}

int cmd_report(const std::string& path, double alpha) {
    const auto rows = sfnet::read_results_file(path);
    std::cout << "direction of change (alpha = " << alpha << ")\n"
              << sfnet::format_direction_report(sfnet::direction_report(rows, alpha)) << '\n'
              << "observed ranges\n"
              << sfnet::format_range_report(sfnet::range_check(rows));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grow-and-destroy scale-free network generator and topology analysis"};
    app.require_subcommand(1);

    Flags gen_flags;
    auto* generate = app.add_subcommand("generate", "grow, attack and measure one configuration");
    gen_flags.add_to(*generate);
    generate->add_option("--export", gen_flags.exports, "comma list of edges,nodes,hist,clusters");

    Flags sweep_flags;
    std::string preset;
    auto* sweep = app.add_subcommand("sweep", "run a parameter grid; list values are comma separated");
    sweep_flags.add_to(*sweep);
    sweep->add_option("--preset", preset, "built-in grid: direction");

    std::string results_path;
    double alpha = 0.05;
    auto* report = app.add_subcommand("report", "direction and range report from a results CSV");
    report->add_option("results", results_path, "results.csv written by sweep")->required();
    report->add_option("--alpha", alpha, "significance level");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParameter;
    }

    try {
        if (*generate) return cmd_generate(gen_flags);
        if (*sweep) return cmd_sweep(sweep_flags, preset);
        return cmd_report(results_path, alpha);
    } catch (const sfnet::IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return kExitParameter;
    }
}
