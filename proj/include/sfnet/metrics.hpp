#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "sfnet/graph.hpp"

namespace sfnet {

/// Number of nodes per degree value.
struct DegreeHistogram {
    std::map<std::size_t, std::size_t> counts;
    std::size_t total = 0;

    [[nodiscard]] std::size_t count(std::size_t k) const;
    /// count(k) / total
    [[nodiscard]] double probability(std::size_t k) const;
    /// Sum of k * count(k) / total, computed in integers.
    [[nodiscard]] double mean_degree() const;
};

struct PowerLawPoint {
    double x = 0.0;
    double y = 0.0;
};

/// y ~ x^-exponent fitted by least squares on (log x, log y).
struct PowerLawFit {
    double exponent = 0.0;
    double std_error = 0.0;
    double x_min = 0.0;
    double x_max = 0.0;
    double r_squared = 0.0;
    std::size_t points = 0;
    bool valid = false;  ///< false when fewer than three usable points
};

/// Component sizes with the giant component split off.
struct ClusterStats {
    std::size_t giant_size = 0;
    std::vector<std::size_t> other_sizes;  ///< sorted descending
    std::size_t node_count = 0;

    /// Total number of components, giant included.
    [[nodiscard]] std::size_t cluster_count() const noexcept {
        return node_count == 0 ? 0 : other_sizes.size() + 1;
    }
    /// n(S): number of non-giant components of each size.
    [[nodiscard]] std::map<std::size_t, std::size_t> size_histogram() const;
};

/// Fit-window configuration. Zero bounds select the data-driven defaults:
/// degree fits use [m, largest k with count >= min_tail_count_degree];
/// cluster fits use [2, largest S with n(S) >= min_tail_count_cluster].
struct FitOptions {
    std::size_t degree_k_min = 0;
    std::size_t degree_k_max = 0;
    std::size_t min_tail_count_degree = 5;
    std::size_t cluster_s_min = 2;
    std::size_t cluster_s_max = 0;
    std::size_t min_tail_count_cluster = 3;
};

struct MetricsReport {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    PowerLawFit gamma;
    double avg_degree = 0.0;
    PowerLawFit tau;
    double avg_clustering = 0.0;
    double giant_fraction = 0.0;
    std::size_t cluster_count = 0;
    std::vector<std::size_t> cluster_sizes;  ///< non-giant component sizes, descending
};

/// Each of these throws std::domain_error on an empty graph. The degree
/// histogram and clustering kernels run in parallel when built with OpenMP;
/// results are bit-identical to the serial reference below.
DegreeHistogram degree_distribution(const Graph& g);
double average_degree(const Graph& g);
ClusterStats cluster_size_distribution(const Graph& g);
double giant_fraction(const Graph& g);
/// Mean local clustering over all live nodes; degree < 2 nodes count as 0.
double average_clustering(const Graph& g);

/// Least-squares power-law fit over points with x in [x_min, x_max] and y > 0.
PowerLawFit fit_power_law(std::span<const PowerLawPoint> points, double x_min, double x_max);

PowerLawFit fit_degree_exponent(const DegreeHistogram& h, std::size_t m, const FitOptions& options = {});
PowerLawFit fit_cluster_exponent(const ClusterStats& clusters, const FitOptions& options = {});

/// (k, P(k) / (2 m^2)) for every degree present in h.
std::vector<std::pair<std::size_t, double>> collapse_degree_distribution(const DegreeHistogram& h, std::size_t m);

/// Kolmogorov-Smirnov distance between two rescaled curves restricted to
/// k in [k_lo, k_hi], each renormalized to unit mass over that range.
double collapse_ks_distance(std::span<const std::pair<std::size_t, double>> a,
                            std::span<const std::pair<std::size_t, double>> b, std::size_t k_lo, std::size_t k_hi);

MetricsReport compute_metrics(const Graph& g, std::size_t m, const FitOptions& options = {});

namespace serial {

// Single-threaded reference kernels.
DegreeHistogram degree_distribution(const Graph& g);
double average_clustering(const Graph& g);
std::vector<double> local_clustering_all(const Graph& g);

}  // namespace serial

/// Local clustering per id slot (0 for dead slots), parallel kernel.
std::vector<double> local_clustering_all(const Graph& g);

}  // namespace sfnet
