#include "sfnet/io.hpp"

#include <fmt/format.h>

#include <fstream>
#include <ostream>

#include "sfnet/errors.hpp"

namespace sfnet::io {

void write_edge_list(std::ostream& os, const Graph& g) {
    for (const auto& [u, v] : g.edges()) os << u.value << ' ' << v.value << '\n';
}

void write_node_table(std::ostream& os, const Graph& g) {
    for (NodeId v : g.live_nodes()) os << fmt::format("{} {:.9g}\n", v.value, g.fitness(v));
}

void write_degree_histogram(std::ostream& os, const DegreeHistogram& h) {
    os << "k,count,pk\n";
    for (const auto& [k, c] : h.counts) os << fmt::format("{},{},{}\n", k, c, format_real(h.probability(k)));
}

void write_cluster_sizes(std::ostream& os, const ClusterStats& clusters) {
    os << "S,count\n";
    for (const auto& [s, c] : clusters.size_histogram()) os << fmt::format("{},{}\n", s, c);
}

std::string format_real(double x) { return fmt::format("{:.10g}", x); }

std::string format_report_row(const GenerationParams& gen, const AttackSpec& attack, const MetricsReport& r) {
    const std::size_t removed = attack.removal_count(gen.n0);
    const double eta = static_cast<double>(removed) / static_cast<double>(gen.n0);
    auto fit_fields = [](const PowerLawFit& fit) {
        return fit.valid ? format_real(fit.exponent) + "," + format_real(fit.std_error) : std::string(",");
    };
    return fmt::format("{},{},{},{},{},{},{},{},{},{},{},{}", gen.n0, gen.m, format_real(gen.p), to_string(attack.kind),
                       format_real(eta), r.node_count, fit_fields(r.gamma), format_real(r.avg_degree),
                       fit_fields(r.tau), format_real(r.avg_clustering), format_real(r.giant_fraction),
                       r.cluster_count);
}

void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body, bool append) {
    std::ofstream os(path, append ? std::ios::app : std::ios::trunc);
    if (!os) throw IoError("cannot open " + path.string() + " for writing");
    body(os);
    os.flush();
    if (!os) throw IoError("failed writing " + path.string());
}

}  // namespace sfnet::io
