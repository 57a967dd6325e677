#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include "sfnet/attack.hpp"
#include "sfnet/generator.hpp"
#include "sfnet/graph.hpp"
#include "sfnet/metrics.hpp"

namespace sfnet::io {

/// Column header of a single metrics report row.
inline constexpr std::string_view kReportHeader =
    "n0,m,p,attack,eta,n,gamma,gamma_err,avg_k,tau,tau_err,avg_c,giant_frac,cluster_count";

/// `u v` per line, u < v, sorted.
void write_edge_list(std::ostream& os, const Graph& g);
/// `id fitness` per live node, fitness printed with 9 significant digits.
void write_node_table(std::ostream& os, const Graph& g);
/// `k,count,pk`
void write_degree_histogram(std::ostream& os, const DegreeHistogram& h);
/// `S,count` over non-giant components.
void write_cluster_sizes(std::ostream& os, const ClusterStats& clusters);

/// Real numbers in every CSV are printed with this formatter.
std::string format_real(double x);

/// One report row (no trailing newline). `eta` in the row is N_a / n0.
/// Invalid fits leave their exponent and error fields empty.
std::string format_report_row(const GenerationParams& gen, const AttackSpec& attack, const MetricsReport& report);

/// Opens `path` for writing (truncating unless `append`) and hands the
/// stream to `body`. Throws IoError if the file cannot be written.
void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body,
                bool append = false);

}  // namespace sfnet::io
