// Acceptance suite: every criterion runs at desk scale (n0 = 30000, m = 3,
// 20 replicas unless stated) and prints one PASS/FAIL line.
//
// Usage: sfnet_acceptance <path-to-sfnet-cli>

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sfnet/attack.hpp"
#include "sfnet/config.hpp"
#include "sfnet/generator.hpp"
#include "sfnet/metrics.hpp"
#include "sfnet/report.hpp"
#include "sfnet/stats.hpp"
#include "sfnet/sweep.hpp"

using namespace sfnet;

namespace {

constexpr std::size_t kN0 = 30000;
constexpr std::size_t kM = 3;
constexpr std::size_t kReplicas = 20;
constexpr double kAlpha = 0.05;
// Attack experiments run in the fitness-dominated regime.
constexpr double kAttackP = 0.1;

struct Outcome {
    bool pass = false;
    std::string detail;
};

int g_failures = 0;

void report(const char* id, const char* title, const Outcome& o, double seconds) {
    std::cout << fmt::format("[{}] {:<4} {} ({:.1f}s)\n      {}\n", o.pass ? "PASS" : "FAIL", id, title, seconds,
                             o.detail)
              << std::flush;
    if (!o.pass) ++g_failures;
}

void run(const char* id, const char* title, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    report(id, title, o, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

// Ensemble of reports for one configuration. Each configuration gets its
// own master seed so that no two criteria share replicas by accident.
std::vector<MetricsReport> ensemble(const GenerationParams& gen, const AttackSpec& attack, std::uint64_t seed,
                                    std::size_t replicas = kReplicas) {
    SweepGrid grid;
    grid.n0 = {gen.n0};
    grid.m = {gen.m};
    grid.p = {gen.p};
    grid.attack = {attack.kind};
    grid.eta = {attack.eta};
    grid.replicas = replicas;
    grid.seed = seed;
    std::vector<MetricsReport> out;
    for (auto& row : run_sweep(grid)) {
        if (!row.ok) throw std::runtime_error(row.error);
        out.push_back(std::move(row.report));
    }
    return out;
}

template <class Get>
std::vector<double> column(const std::vector<MetricsReport>& reports, Get get) {
    std::vector<double> xs;
    for (const auto& r : reports) {
        if (auto v = get(r)) xs.push_back(*v);
    }
    return xs;
}

std::optional<double> gamma_of(const MetricsReport& r) {
    return r.gamma.valid ? std::optional(r.gamma.exponent) : std::nullopt;
}
std::optional<double> gamma_r2_of(const MetricsReport& r) {
    return r.gamma.valid ? std::optional(r.gamma.r_squared) : std::nullopt;
}
std::optional<double> tau_of(const MetricsReport& r) {
    return r.tau.valid ? std::optional(r.tau.exponent) : std::nullopt;
}
std::optional<double> avg_k_of(const MetricsReport& r) { return r.avg_degree; }
std::optional<double> avg_c_of(const MetricsReport& r) { return r.avg_clustering; }
std::optional<double> giant_of(const MetricsReport& r) { return r.giant_fraction; }
std::optional<double> clusters_of(const MetricsReport& r) { return static_cast<double>(r.cluster_count); }

double mean_of(const std::vector<MetricsReport>& reports, std::optional<double> (*get)(const MetricsReport&)) {
    return stats::mean(column(reports, get));
}

std::uint64_t hash_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return std::hash<std::string>{}(ss.str());
}

// ---------------------------------------------------------------------------

Outcome edge_count_identity() {
    const std::size_t m0 = kM + 2;
    const std::size_t edges = m0 + (kN0 - m0) * kM;
    const double closed_form = 2.0 * static_cast<double>(edges) / static_cast<double>(kN0);
    bool ok = true;
    double worst_seconds = 0.0;
    double worst_dev = 0.0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto t0 = std::chrono::steady_clock::now();
        RngStream rng(seed);
        const Graph g = grow({kN0, kM, 0.1 * static_cast<double>(seed)}, rng);
        const double k = average_degree(g);
        worst_seconds = std::max(worst_seconds, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
        ok = ok && g.edge_count() == edges;
        worst_dev = std::max(worst_dev, std::fabs(k - closed_form));
    }
    ok = ok && worst_dev <= 1e-9 && worst_seconds < 1.0;
    return {ok, fmt::format("edges={} (expected {}), <k> closed form {:.9f}, max |dev|={:.2e} (tol 1e-9); "
                            "stated literal 5.9996 disagrees with the closed form; slowest run {:.3f}s (< 1s)",
                            edges, edges, closed_form, worst_dev, worst_seconds)};
}

Outcome connectivity() {
    std::size_t connected = 0;
    std::size_t runs = 0;
    const double ps[] = {0.0, 0.5, 1.0};
    for (std::size_t i = 0; i < 100; ++i) {
        RngStream rng(derive_seed(2000, i % 3, i));
        const Graph g = grow({kN0, kM, ps[i % 3]}, rng);
        connected += connected_components(g).count() == 1;
        ++runs;
    }
    return {connected == 100, fmt::format("{}/{} unattacked runs connected", connected, runs)};
}

Outcome selection_oracle() {
    // Frozen 10-node graph with fixed fitness values.
    const double fitness[10] = {0.9, 0.1, 0.5, 0.3, 0.75, 0.05, 0.6, 0.2, 0.95, 0.4};
    const std::pair<int, int> edges[] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {2, 3}, {3, 4},
                                         {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 0}, {2, 8}, {6, 9}};
    Graph g;
    for (double f : fitness) g.add_node(f);
    for (auto [a, b] : edges) g.add_edge(NodeId{std::uint32_t(a)}, NodeId{std::uint32_t(b)});

    std::vector<double> k(10, 0.0);
    for (auto [a, b] : edges) {
        k[a] += 1;
        k[b] += 1;
    }
    double k_sum = 0.0;
    double fk_sum = 0.0;
    for (int i = 0; i < 10; ++i) {
        k_sum += k[i];
        fk_sum += fitness[i] * k[i];
    }

    constexpr std::size_t kDraws = 1000000;
    std::string detail;
    bool ok = true;
    for (double p : {0.0, 0.3, 1.0}) {
        std::vector<double> expected(10);
        for (int i = 0; i < 10; ++i) expected[i] = p * k[i] / k_sum + (1 - p) * fitness[i] * k[i] / fk_sum;
        RngStream rng(derive_seed(3000, static_cast<std::uint64_t>(p * 10), 0));
        std::vector<std::size_t> counts(10, 0);
        for (std::size_t d = 0; d < kDraws; ++d) {
            const auto w = attachment_weights(g, p, rng);
            ++counts[sample_targets(g, w.weights, 1, rng).front().value];
        }
        const double pv = oracle::chi_squared_gof(counts, expected);
        ok = ok && pv > 0.01;
        detail += fmt::format("attach p={}: chi2 p={:.3f}; ", p, pv);
    }
    for (auto kind : {AttackKind::central, AttackKind::peripheral, AttackKind::general}) {
        std::vector<double> expected(10);
        double total = 0.0;
        for (int i = 0; i < 10; ++i) {
            expected[i] = kind == AttackKind::central      ? k[i]
                          : kind == AttackKind::peripheral ? 1.0 / (k[i] + 1.0)
                                                           : 1.0;
            total += expected[i];
        }
        for (double& e : expected) e /= total;
        RngStream rng(derive_seed(3100, static_cast<std::uint64_t>(kind), 0));
        std::vector<std::size_t> counts(10, 0);
        const AttackSpec one{kind, 0.1};  // removes exactly one of ten nodes
        for (std::size_t d = 0; d < kDraws; ++d) {
            const Graph h = apply_attack(g, one, rng);
            for (std::uint32_t i = 0; i < 10; ++i) {
                if (!h.is_live(NodeId{i})) ++counts[i];
            }
        }
        const double pv = oracle::chi_squared_gof(counts, expected);
        ok = ok && pv > 0.01;
        detail += fmt::format("{}: chi2 p={:.3f}; ", to_string(kind), pv);
    }
    return {ok, detail + "alpha=0.01"};
}

Outcome gamma_monotonicity() {
    const auto p0 = column(ensemble({kN0, kM, 0.0}, {}, 4000), gamma_of);
    const auto p1 = column(ensemble({kN0, kM, 1.0}, {}, 4001), gamma_of);
    const auto t = stats::welch_t_test(p1, p0);
    const double g1 = stats::mean(p1);
    const bool ok = t.mean_difference > 0 && t.p_value < kAlpha && g1 >= 2.5 && g1 <= 3.2;
    return {ok, fmt::format("gamma(p=0)={:.3f}, gamma(p=1)={:.3f} in [2.5,3.2]; diff={:.3f}, Welch p={:.2e}",
                            stats::mean(p0), g1, t.mean_difference, t.p_value)};
}

Outcome attack_ordering() {
    std::map<AttackKind, std::vector<double>> at04;
    std::string detail;
    bool ok = true;
    const double etas[] = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
    for (auto kind : {AttackKind::central, AttackKind::general, AttackKind::peripheral}) {
        std::vector<double> means;
        for (std::size_t i = 0; i < std::size(etas); ++i) {
            const auto ks = column(ensemble({kN0, kM, kAttackP}, {kind, etas[i]}, derive_seed(5000, std::uint64_t(kind), i)),
                                   avg_k_of);
            means.push_back(stats::mean(ks));
            if (etas[i] == 0.4) at04[kind] = ks;
        }
        if (kind != AttackKind::central) {
            const auto line = stats::least_squares(etas, means);
            ok = ok && line.r_squared > 0.95 && line.slope < 0;
            detail += fmt::format("{} <k> vs eta linear r2={:.4f}; ", to_string(kind), line.r_squared);
        }
    }
    const auto cg = stats::welch_t_test(at04[AttackKind::general], at04[AttackKind::central]);
    const auto gp = stats::welch_t_test(at04[AttackKind::peripheral], at04[AttackKind::general]);
    ok = ok && cg.mean_difference > 0 && cg.p_value < kAlpha && gp.mean_difference > 0 && gp.p_value < kAlpha;
    detail += fmt::format("eta=0.4 <k>: central {:.3f} < general {:.3f} (p={:.1e}) < peripheral {:.3f} (p={:.1e})",
                          stats::mean(at04[AttackKind::central]), stats::mean(at04[AttackKind::general]), cg.p_value,
                          stats::mean(at04[AttackKind::peripheral]), gp.p_value);
    return {ok, detail};
}

Outcome degree_robustness() {
    const auto base = ensemble({kN0, kM, kAttackP}, {}, 6000);
    const double g0 = mean_of(base, gamma_of);
    const double r0 = mean_of(base, gamma_r2_of);
    std::string detail = fmt::format("unattacked gamma={:.3f} r2={:.3f}; ", g0, r0);
    bool ok = true;
    for (auto kind : {AttackKind::general, AttackKind::peripheral}) {
        const double g = mean_of(ensemble({kN0, kM, kAttackP}, {kind, 0.4}, 6001 + std::uint64_t(kind)), gamma_of);
        ok = ok && std::fabs(g - g0) < 0.3;
        detail += fmt::format("{} gamma={:.3f} (|diff|={:.3f} < 0.3); ", to_string(kind), g, std::fabs(g - g0));
    }
    const auto central = ensemble({kN0, kM, kAttackP}, {AttackKind::central, 0.4}, 6010);
    const double gc = mean_of(central, gamma_of);
    const double rc = mean_of(central, gamma_r2_of);
    const bool degraded = r0 - rc >= 0.05;
    const bool steeper = gc > g0;
    ok = ok && (degraded || steeper);
    detail += fmt::format("central gamma={:.3f} r2={:.3f} (r2 drop>=0.05: {}, exponent increased: {})", gc, rc, degraded,
                          steeper);
    return {ok, detail};
}

Outcome tau_trend() {
    const double etas[] = {0.15, 0.25, 0.35, 0.45};
    std::vector<double> taus;
    std::vector<double> counts;
    std::string detail;
    bool ok = true;
    for (std::size_t i = 0; i < std::size(etas); ++i) {
        const auto reports = ensemble({kN0, kM, kAttackP}, {AttackKind::central, etas[i]}, derive_seed(7000, 0, i));
        const auto t = column(reports, tau_of);
        ok = ok && t.size() >= 2;
        taus.push_back(stats::mean(t));
        counts.push_back(mean_of(reports, clusters_of));
        detail += fmt::format("eta={}: tau={:.3f} ({} fits), clusters={:.0f}; ", etas[i], taus.back(), t.size(),
                              counts.back());
    }
    for (std::size_t i = 1; i < taus.size(); ++i) {
        ok = ok && taus[i] < taus[i - 1] && counts[i] > counts[i - 1];
    }
    return {ok, detail + "tau strictly decreasing, cluster count increasing"};
}

Outcome percolation() {
    const double peripheral = mean_of(ensemble({kN0, kM, kAttackP}, {AttackKind::peripheral, 0.4}, 8000), giant_of);
    const double central = mean_of(ensemble({kN0, kM, kAttackP}, {AttackKind::central, 0.5}, 8001), giant_of);
    std::vector<double> by_m;
    for (std::size_t m : {2, 3, 5}) {
        by_m.push_back(mean_of(ensemble({kN0, m, kAttackP}, {AttackKind::general, 0.4}, 8010 + m), giant_of));
    }
    const bool ok = peripheral > 0.9 && central < 0.1 && by_m[0] < by_m[1] && by_m[1] < by_m[2];
    return {ok, fmt::format("peripheral eta=0.4 S_g/N={:.4f} (>0.9); central eta=0.5 S_g/N={:.4f} (<0.1); "
                            "general eta=0.4 S_g/N for m=2,3,5: {:.4f} < {:.4f} < {:.4f}",
                            peripheral, central, by_m[0], by_m[1], by_m[2])};
}

Outcome clustering() {
    const auto c0 = column(ensemble({kN0, kM, 0.0}, {}, 9000), avg_c_of);
    const auto c1 = column(ensemble({kN0, kM, 1.0}, {}, 9001), avg_c_of);
    const auto t = stats::welch_t_test(c0, c1);
    const bool fitness_higher = t.mean_difference > 0 && t.p_value < kAlpha;

    const double base = mean_of(ensemble({kN0, kM, kAttackP}, {}, 9002), avg_c_of);
    const double peripheral = mean_of(ensemble({kN0, kM, kAttackP}, {AttackKind::peripheral, 0.4}, 9003), avg_c_of);
    const double central = mean_of(ensemble({kN0, kM, kAttackP}, {AttackKind::central, 0.6}, 9004), avg_c_of);

    std::vector<double> log_n;
    std::vector<double> log_c;
    for (std::size_t n : {1000, 10000, 30000}) {
        log_n.push_back(std::log(static_cast<double>(n)));
        log_c.push_back(std::log(mean_of(ensemble({n, kM, kAttackP}, {}, 9010 + n), avg_c_of)));
    }
    const auto slope = stats::least_squares(log_n, log_c).slope;
    const bool ok = fitness_higher && peripheral > base && central < 0.2 * base && slope < 0 &&
                    log_c[0] > log_c[1] && log_c[1] > log_c[2];
    return {ok, fmt::format("<C>(p=0)={:.5f} > <C>(p=1)={:.5f} (Welch p={:.1e}); p={}: <C>(0)={:.5f}, "
                            "peripheral 0.4 {:.5f}, central 0.6 {:.6f} (< {:.6f}); <C>(N0) log-log slope={:.3f}",
                            stats::mean(c0), stats::mean(c1), t.p_value, kAttackP, base, peripheral, central,
                            0.2 * base, slope)};
}

Outcome data_collapse() {
    std::map<std::size_t, std::vector<std::pair<std::size_t, double>>> curves;
    std::size_t k_hi = SIZE_MAX;
    for (std::size_t m : {2, 3, 5}) {
        DegreeHistogram pooled;
        for (std::size_t r = 0; r < kReplicas; ++r) {
            const auto real = realize({kN0, m, 0.5}, {}, derive_seed(10000, m, r));
            for (const auto& [k, c] : degree_distribution(real.graph).counts) pooled.counts[k] += c;
            pooled.total += real.graph.node_count();
        }
        std::size_t tail = 0;
        for (const auto& [k, c] : pooled.counts) {
            if (c >= 5) tail = std::max(tail, k);
        }
        k_hi = std::min(k_hi, tail);
        curves[m] = collapse_degree_distribution(pooled, m);
    }
    const std::size_t k_lo = 5;  // smallest degree present for every m
    bool ok = true;
    std::string detail = fmt::format("shared k range [{}, {}]; ", k_lo, k_hi);
    for (auto [a, b] : {std::pair{2, 3}, std::pair{2, 5}, std::pair{3, 5}}) {
        const double ks = collapse_ks_distance(curves[a], curves[b], k_lo, k_hi);
        ok = ok && ks < 0.1;
        detail += fmt::format("KS(m={},m={})={:.4f}; ", a, b, ks);
    }
    return {ok, detail + "threshold 0.1"};
}

Outcome fitter_oracle() {
    std::vector<PowerLawPoint> exact;
    for (int x = 2; x <= 100; ++x) exact.push_back({double(x), 7.0 * std::pow(x, -2.5)});
    const auto fit_exact = fit_power_law(exact, 2, 100);
    const bool exact_ok = fit_exact.valid && std::fabs(fit_exact.exponent - 2.5) < 1e-6;

    const oracle::DiscretePowerLaw law(2.5, 1000000);
    RngStream rng(11000);
    DegreeHistogram h;
    for (int i = 0; i < 100000; ++i) ++h.counts[law(rng)];
    h.total = 100000;
    const auto fit_sampled = fit_degree_exponent(h, 1);
    const bool sampled_ok = fit_sampled.valid && std::fabs(fit_sampled.exponent - 2.5) <= 0.15;
    return {exact_ok && sampled_ok,
            fmt::format("exact data: {:.9f} (|err| < 1e-6); 1e5 inverse-CDF draws: {:.4f} (within 0.15 of 2.5)",
                        fit_exact.exponent, fit_sampled.exponent)};
}

Outcome determinism(const std::string& cli) {
    const auto root = std::filesystem::temp_directory_path() / "sfnet_acceptance_determinism";
    std::filesystem::remove_all(root);
    std::filesystem::create_directories(root);
    {
        std::ofstream conf(root / "run.conf");
        conf << "n0 = 30000\nm = 3\np = 0.1\nattack = central\neta = 0.4\nseed = 2024\n";
    }
    std::uint64_t hashes[2][3];
    for (int i = 0; i < 2; ++i) {
        const auto out = root / fmt::format("run{}", i);
        const std::string cmd = fmt::format("\"{}\" generate --config \"{}\" --out \"{}\" --export edges,nodes > /dev/null",
                                            cli, (root / "run.conf").string(), out.string());
        if (std::system(cmd.c_str()) != 0) return {false, "CLI invocation failed: " + cmd};
        hashes[i][0] = hash_file(out / "edges.txt");
        hashes[i][1] = hash_file(out / "nodes.txt");
        hashes[i][2] = hash_file(out / "report.csv");
    }
    bool ok = true;
    for (int f = 0; f < 3; ++f) ok = ok && hashes[0][f] == hashes[1][f];
    return {ok, fmt::format("edges {:016x}/{:016x}, nodes {:016x}/{:016x}, report {:016x}/{:016x}", hashes[0][0],
                            hashes[1][0], hashes[0][1], hashes[1][1], hashes[0][2], hashes[1][2])};
}

Outcome direction_matrix() {
    const auto grids = direction_grids(kReplicas, 12000);
    const auto results = run_sweep(grids);
    const auto rows = to_rows(results);
    const auto matrix = direction_report(rows, kAlpha);

    using D = Direction;
    const std::map<std::pair<Output, Input>, D> expected{
        {{Output::gamma, Input::p}, D::up},        {{Output::gamma, Input::m}, D::flat},
        {{Output::gamma, Input::eta}, D::flat},    {{Output::avg_k, Input::p}, D::flat},
        {{Output::avg_k, Input::m}, D::up},        {{Output::avg_k, Input::eta}, D::down},
        {{Output::tau, Input::p}, D::flat},        {{Output::tau, Input::m}, D::up},
        {{Output::tau, Input::eta}, D::down},      {{Output::avg_c, Input::p}, D::down},
        {{Output::avg_c, Input::m}, D::up},        {{Output::avg_c, Input::eta}, D::mixed},
        {{Output::giant_frac, Input::p}, D::flat}, {{Output::giant_frac, Input::m}, D::up},
        {{Output::giant_frac, Input::eta}, D::down},
    };
    std::string detail;
    std::string mismatches;
    for (const auto& [key, want] : expected) {
        const auto& cell = matrix.at(key.first, key.second);
        const bool match = cell.direction == want;
        detail += fmt::format("{}/{}:{}{} ", to_string(key.first), to_string(key.second), symbol(cell.direction),
                              match ? "" : fmt::format("(want {})", symbol(want)));
        if (!match) {
            mismatches += fmt::format("\n      mismatch {} vs {}: {}", to_string(key.first), to_string(key.second),
                                      cell.detail);
        }
    }
    return {mismatches.empty(), detail + mismatches};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: sfnet_acceptance <path-to-sfnet-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const auto t0 = std::chrono::steady_clock::now();

    run("C1", "edge-count identity", edge_count_identity);
    run("C2", "connectivity of grown networks", connectivity);
    run("C3", "selection-probability oracle", selection_oracle);
    run("C4", "gamma increases with p", gamma_monotonicity);
    run("C5", "attack ordering of <k>", attack_ordering);
    run("C6", "degree-distribution robustness", degree_robustness);
    run("C7", "tau decreases with eta (central)", tau_trend);
    run("C8", "percolation of the giant component", percolation);
    run("C9", "average clustering trends", clustering);
    run("C10", "data collapse by 2m^2", data_collapse);
    run("C11", "power-law fitter oracle", fitter_oracle);
    run("C12", "determinism of generate", [&] { return determinism(cli); });
    run("C13", "input/output direction matrix", direction_matrix);

    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << fmt::format("{} criteria failed; total {:.1f}s\n", g_failures, total);
    return g_failures == 0 ? 0 : 1;
}
