#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sfnet/config.hpp"
#include "sfnet/metrics.hpp"

namespace sfnet {

/// Outcome of one replica of one cell.
struct RunResult {
    std::size_t cell = 0;
    std::size_t replica = 0;
    std::uint64_t seed = 0;
    GenerationParams gen;
    AttackSpec attack;
    MetricsReport report;
    bool ok = true;
    std::string error;
};

/// A grown-and-attacked graph with its metrics.
struct Realization {
    Graph graph;
    MetricsReport report;
};

/// grow -> attack -> measure for one seed. Pure: no file I/O.
Realization realize(const GenerationParams& gen, const AttackSpec& attack, std::uint64_t seed,
                    const GrowOptions& grow_options = {}, RemovalOrder removal = RemovalOrder::sequential);

/// Runs every replica of `cfg`, writes the requested artifacts into cfg.out
/// (`edges.txt`, `nodes.txt`, `degree_hist.csv`, `clusters.csv`, with an
/// `r<replica>_` prefix when replicas > 1), overwrites `report.csv` with the
/// rows of this run and appends them to `results.csv`.
/// Throws ParameterError on invalid configuration and IoError on write failure.
std::vector<RunResult> run_single(const RunConfig& cfg);

/// Runs every (cell, replica) of the grids. Tasks run on a bounded OpenMP
/// worker pool; failures are captured per row. Rows are ordered by grid,
/// then cell, then replica, independent of scheduling. Cell indices keep
/// counting across grids.
std::vector<RunResult> run_sweep(std::span<const SweepGrid> grids);
inline std::vector<RunResult> run_sweep(const SweepGrid& grid) { return run_sweep(std::span(&grid, 1)); }

inline constexpr std::string_view kResultsFormatVersion = "# sfnet-results v1";

/// Results table: version comment, header (report columns followed by
/// cell,replica,seed,status), then one row per run.
void write_results(std::ostream& os, std::span<const RunResult> rows);

/// Per-cell mean and standard deviation of every output.
void write_aggregate(std::ostream& os, std::span<const RunResult> rows);

/// Row as read back from a results table. Missing fit fields are nullopt.
struct ResultRow {
    std::size_t n0 = 0;
    std::size_t m = 0;
    double p = 0.0;
    AttackKind attack = AttackKind::none;
    double eta = 0.0;
    std::size_t n = 0;
    std::optional<double> gamma;
    std::optional<double> gamma_err;
    double avg_k = 0.0;
    std::optional<double> tau;
    std::optional<double> tau_err;
    double avg_c = 0.0;
    double giant_frac = 0.0;
    std::size_t cluster_count = 0;
    bool ok = true;
};

ResultRow to_row(const RunResult& result);
std::vector<ResultRow> to_rows(std::span<const RunResult> results);

/// Reads a results table or a bare report CSV (header `n0,m,...`).
/// Rows whose status is not `ok` are returned with ok = false.
std::vector<ResultRow> read_results(std::istream& is);
std::vector<ResultRow> read_results_file(const std::filesystem::path& path);

}  // namespace sfnet
