#include "sfnet/sweep.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "sfnet/errors.hpp"
#include "sfnet/io.hpp"
#include "sfnet/stats.hpp"

namespace sfnet {

Realization realize(const GenerationParams& gen, const AttackSpec& attack, std::uint64_t seed,
                    const GrowOptions& grow_options, RemovalOrder removal) {
    RngStream rng(seed);
    Graph g = grow(gen, rng, grow_options);
    g = apply_attack(std::move(g), attack, rng, removal);
    MetricsReport report = compute_metrics(g, gen.m);
    return {std::move(g), std::move(report)};
}

std::vector<RunResult> run_single(const RunConfig& cfg) {
    cfg.validate();
    std::error_code ec;
    std::filesystem::create_directories(cfg.out, ec);
    if (ec) throw IoError("cannot create output directory " + cfg.out.string() + ": " + ec.message());

    std::vector<RunResult> results;
    for (std::size_t r = 0; r < cfg.replicas; ++r) {
        RunResult res;
        res.replica = r;
        res.seed = derive_seed(cfg.seed, 0, r);
        res.gen = cfg.gen;
        res.attack = cfg.attack;
        Realization real = realize(cfg.gen, cfg.attack, res.seed, cfg.grow, cfg.removal);
        res.report = std::move(real.report);

        const std::string prefix = cfg.replicas > 1 ? fmt::format("r{}_", r) : std::string();
        const Graph& g = real.graph;
        if (cfg.exports.edges) io::write_file(cfg.out / (prefix + "edges.txt"), [&](auto& os) { io::write_edge_list(os, g); });
        if (cfg.exports.nodes) io::write_file(cfg.out / (prefix + "nodes.txt"), [&](auto& os) { io::write_node_table(os, g); });
        if (cfg.exports.hist) {
            io::write_file(cfg.out / (prefix + "degree_hist.csv"),
                           [&](auto& os) { io::write_degree_histogram(os, degree_distribution(g)); });
        }
        if (cfg.exports.clusters) {
            io::write_file(cfg.out / (prefix + "clusters.csv"),
                           [&](auto& os) { io::write_cluster_sizes(os, cluster_size_distribution(g)); });
        }
        results.push_back(std::move(res));
    }

    io::write_file(cfg.out / "report.csv", [&](std::ostream& os) {
        os << io::kReportHeader << '\n';
        for (const auto& res : results) os << io::format_report_row(res.gen, res.attack, res.report) << '\n';
    });
    const auto results_path = cfg.out / "results.csv";
    const bool fresh = !std::filesystem::exists(results_path);
    io::write_file(
        results_path,
        [&](std::ostream& os) {
            if (fresh) {
                write_results(os, results);
            } else {
                std::ostringstream all;
                write_results(all, results);
                // Skip the version line and header when appending.
                std::string text = all.str();
                for (int i = 0; i < 2; ++i) text.erase(0, text.find('\n') + 1);
                os << text;
            }
        },
        /*append=*/true);
    return results;
}

std::vector<RunResult> run_sweep(std::span<const SweepGrid> grids) {
    struct Task {
        std::size_t cell;
        std::size_t replica;
        std::uint64_t seed;
        SweepGrid::Cell spec;
        GrowOptions grow;
        RemovalOrder removal;
    };
    std::vector<Task> tasks;
    std::size_t cell_offset = 0;
    for (const auto& grid : grids) {
        grid.validate();
        for (const auto& cell : grid.cells()) {
            for (std::size_t r = 0; r < grid.replicas; ++r) {
                tasks.push_back({cell_offset + cell.index, r, derive_seed(grid.seed, cell.index, r), cell, grid.grow,
                                 grid.removal});
            }
        }
        cell_offset += grid.cell_count();
    }

    std::vector<RunResult> rows(tasks.size());
    const auto count = static_cast<std::int64_t>(tasks.size());
#ifdef SFNET_USE_OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (std::int64_t i = 0; i < count; ++i) {
        const Task& t = tasks[static_cast<std::size_t>(i)];
        RunResult& row = rows[static_cast<std::size_t>(i)];
        row.cell = t.cell;
        row.replica = t.replica;
        row.seed = t.seed;
        row.gen = t.spec.gen;
        row.attack = t.spec.attack;
        try {
            row.report = realize(t.spec.gen, t.spec.attack, t.seed, t.grow, t.removal).report;
        } catch (const std::exception& e) {
            row.ok = false;
            row.error = e.what();
        }
    }
    return rows;
}

namespace {

std::string status_field(const RunResult& r) {
    if (r.ok) return "ok";
    std::string msg = "error: " + r.error;
    std::replace(msg.begin(), msg.end(), ',', ';');
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    return msg;
}

}  // namespace

void write_results(std::ostream& os, std::span<const RunResult> rows) {
    os << kResultsFormatVersion << '\n' << io::kReportHeader << ",cell,replica,seed,status\n";
    for (const auto& r : rows) {
        if (r.ok) {
            os << io::format_report_row(r.gen, r.attack, r.report);
        } else {
            os << fmt::format("{},{},{},{},{},,,,,,,,,", r.gen.n0, r.gen.m, io::format_real(r.gen.p),
                              to_string(r.attack.kind), io::format_real(r.attack.eta));
        }
        os << fmt::format(",{},{},{},{}\n", r.cell, r.replica, r.seed, status_field(r));
    }
}

ResultRow to_row(const RunResult& r) {
    ResultRow row;
    row.n0 = r.gen.n0;
    row.m = r.gen.m;
    row.p = r.gen.p;
    row.attack = r.attack.kind;
    row.ok = r.ok;
    if (!r.ok) {
        row.eta = r.attack.eta;
        return row;
    }
    row.eta = static_cast<double>(r.attack.removal_count(r.gen.n0)) / static_cast<double>(r.gen.n0);
    row.n = r.report.node_count;
    if (r.report.gamma.valid) {
        row.gamma = r.report.gamma.exponent;
        row.gamma_err = r.report.gamma.std_error;
    }
    row.avg_k = r.report.avg_degree;
    if (r.report.tau.valid) {
        row.tau = r.report.tau.exponent;
        row.tau_err = r.report.tau.std_error;
    }
    row.avg_c = r.report.avg_clustering;
    row.giant_frac = r.report.giant_fraction;
    row.cluster_count = r.report.cluster_count;
    return row;
}

std::vector<ResultRow> to_rows(std::span<const RunResult> results) {
    std::vector<ResultRow> out;
    out.reserve(results.size());
    for (const auto& r : results) out.push_back(to_row(r));
    return out;
}

void write_aggregate(std::ostream& os, std::span<const RunResult> rows) {
    std::map<std::size_t, std::vector<ResultRow>> by_cell;
    for (const auto& r : rows) by_cell[r.cell].push_back(to_row(r));

    os << "cell,n0,m,p,attack,eta,runs,failed";
    for (const char* name : {"gamma", "avg_k", "tau", "avg_c", "giant_frac", "cluster_count"}) {
        os << ',' << name << "_mean," << name << "_sd," << name << "_n";
    }
    os << '\n';
    for (const auto& [cell, cell_rows] : by_cell) {
        const ResultRow& first = cell_rows.front();
        const auto failed = static_cast<std::size_t>(
            std::count_if(cell_rows.begin(), cell_rows.end(), [](const ResultRow& r) { return !r.ok; }));
        // Take the cell description from a successful row when there is one.
        const auto describe = std::find_if(cell_rows.begin(), cell_rows.end(), [](const ResultRow& r) { return r.ok; });
        const ResultRow& d = describe != cell_rows.end() ? *describe : first;
        os << fmt::format("{},{},{},{},{},{},{},{}", cell, d.n0, d.m, io::format_real(d.p), to_string(d.attack),
                          io::format_real(d.eta), cell_rows.size(), failed);
        auto column = [&](auto get) {
            std::vector<double> xs;
            for (const auto& r : cell_rows) {
                if (!r.ok) continue;
                if (auto v = get(r)) xs.push_back(*v);
            }
            os << ',' << (xs.empty() ? std::string() : io::format_real(stats::mean(xs))) << ','
               << (xs.size() < 2 ? std::string() : io::format_real(stats::stddev(xs))) << ',' << xs.size();
        };
        column([](const ResultRow& r) { return r.gamma; });
        column([](const ResultRow& r) { return std::optional<double>(r.avg_k); });
        column([](const ResultRow& r) { return r.tau; });
        column([](const ResultRow& r) { return std::optional<double>(r.avg_c); });
        column([](const ResultRow& r) { return std::optional<double>(r.giant_frac); });
        column([](const ResultRow& r) { return std::optional<double>(static_cast<double>(r.cluster_count)); });
        os << '\n';
    }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        out.push_back(line.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

template <class T>
T parse_field(const std::string& s, const char* name) {
    T value{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParameterError(std::string("results: bad value '") + s + "' in column " + name);
    }
    return value;
}

std::optional<double> optional_real(const std::string& s, const char* name) {
    if (s.empty()) return std::nullopt;
    return parse_field<double>(s, name);
}

}  // namespace

std::vector<ResultRow> read_results(std::istream& is) {
    std::string line;
    std::vector<std::string> header;
    std::vector<ResultRow> rows;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (header.empty()) {
            header = split_csv_line(line);
            const auto expected = split_csv_line(std::string(io::kReportHeader));
            if (header.size() < expected.size() || !std::equal(expected.begin(), expected.end(), header.begin())) {
                throw ParameterError("results: unexpected header '" + line + "'");
            }
            continue;
        }
        const auto f = split_csv_line(line);
        if (f.size() != header.size()) throw ParameterError("results: wrong field count in '" + line + "'");
        std::map<std::string, std::string> by_name;
        for (std::size_t i = 0; i < f.size(); ++i) by_name[header[i]] = f[i];

        ResultRow row;
        if (const auto it = by_name.find("status"); it != by_name.end()) row.ok = it->second == "ok";
        row.n0 = parse_field<std::size_t>(by_name["n0"], "n0");
        row.m = parse_field<std::size_t>(by_name["m"], "m");
        row.p = parse_field<double>(by_name["p"], "p");
        const auto kind = parse_attack_kind(by_name["attack"]);
        if (!kind) throw ParameterError("results: unknown attack '" + by_name["attack"] + "'");
        row.attack = *kind;
        row.eta = parse_field<double>(by_name["eta"], "eta");
        if (row.ok) {
            row.n = parse_field<std::size_t>(by_name["n"], "n");
            row.gamma = optional_real(by_name["gamma"], "gamma");
            row.gamma_err = optional_real(by_name["gamma_err"], "gamma_err");
            row.avg_k = parse_field<double>(by_name["avg_k"], "avg_k");
            row.tau = optional_real(by_name["tau"], "tau");
            row.tau_err = optional_real(by_name["tau_err"], "tau_err");
            row.avg_c = parse_field<double>(by_name["avg_c"], "avg_c");
            row.giant_frac = parse_field<double>(by_name["giant_frac"], "giant_frac");
            row.cluster_count = parse_field<std::size_t>(by_name["cluster_count"], "cluster_count");
        }
        rows.push_back(row);
    }
    if (header.empty()) throw ParameterError("results: missing header");
    return rows;
}

std::vector<ResultRow> read_results_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read results file " + path.string());
    return read_results(in);
}

}  // namespace sfnet
