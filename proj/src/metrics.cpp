#include "sfnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#ifdef SFNET_USE_OPENMP
#include <omp.h>
#endif

#include "sfnet/stats.hpp"

namespace sfnet {

namespace {

void require_nonempty(const Graph& g, const char* op) {
    if (g.node_count() == 0) throw std::domain_error(std::string(op) + ": graph is empty");
}

// Edges among the neighbors of v, using `mark` (indexed by id) stamped with
// `stamp` for membership. Each such edge is seen from both endpoints.
std::size_t neighbor_links(const Graph& g, NodeId v, std::vector<std::uint32_t>& mark, std::uint32_t stamp) {
    const auto nbrs = g.neighbors(v);
    for (NodeId u : nbrs) mark[u.value] = stamp;
    std::size_t twice = 0;
    for (NodeId u : nbrs) {
        for (NodeId w : g.neighbors(u)) {
            if (mark[w.value] == stamp) ++twice;
        }
    }
    return twice / 2;
}

double coefficient(std::size_t links, std::size_t k) {
    if (k < 2) return 0.0;
    return static_cast<double>(links) / (static_cast<double>(k) * static_cast<double>(k - 1) / 2.0);
}

// Summation in id order keeps the mean independent of the thread count.
double mean_over_live(const Graph& g, const std::vector<double>& per_slot) {
    double sum = 0.0;
    for (std::size_t i = 0; i < per_slot.size(); ++i) {
        if (g.is_live(NodeId{static_cast<std::uint32_t>(i)})) sum += per_slot[i];
    }
    return sum / static_cast<double>(g.node_count());
}

DegreeHistogram histogram_from_counts(const std::vector<std::size_t>& by_degree, std::size_t total) {
    DegreeHistogram h;
    h.total = total;
    for (std::size_t k = 0; k < by_degree.size(); ++k) {
        if (by_degree[k] != 0) h.counts.emplace(k, by_degree[k]);
    }
    return h;
}

}  // namespace

std::size_t DegreeHistogram::count(std::size_t k) const {
    const auto it = counts.find(k);
    return it == counts.end() ? 0 : it->second;
}

double DegreeHistogram::probability(std::size_t k) const {
    return total == 0 ? 0.0 : static_cast<double>(count(k)) / static_cast<double>(total);
}

double DegreeHistogram::mean_degree() const {
    std::size_t sum = 0;
    for (const auto& [k, c] : counts) sum += k * c;
    return total == 0 ? 0.0 : static_cast<double>(sum) / static_cast<double>(total);
}

std::map<std::size_t, std::size_t> ClusterStats::size_histogram() const {
    std::map<std::size_t, std::size_t> out;
    for (std::size_t s : other_sizes) ++out[s];
    return out;
}

namespace serial {

DegreeHistogram degree_distribution(const Graph& g) {
    require_nonempty(g, "degree_distribution");
    std::vector<std::size_t> by_degree;
    for (NodeId v : g.live_nodes()) {
        const std::size_t k = g.degree(v);
        if (k >= by_degree.size()) by_degree.resize(k + 1, 0);
        ++by_degree[k];
    }
    return histogram_from_counts(by_degree, g.node_count());
}

std::vector<double> local_clustering_all(const Graph& g) {
    const std::size_t bound = g.id_bound();
    std::vector<double> out(bound, 0.0);
    std::vector<std::uint32_t> mark(bound, 0);
    for (std::uint32_t i = 0; i < bound; ++i) {
        const NodeId v{i};
        if (!g.is_live(v)) continue;
        out[i] = coefficient(neighbor_links(g, v, mark, i + 1), g.degree(v));
    }
    return out;
}

double average_clustering(const Graph& g) {
    require_nonempty(g, "average_clustering");
    return mean_over_live(g, serial::local_clustering_all(g));
}

}  // namespace serial

DegreeHistogram degree_distribution(const Graph& g) {
#ifdef SFNET_USE_OPENMP
    require_nonempty(g, "degree_distribution");
    const auto bound = static_cast<std::int64_t>(g.id_bound());
    std::size_t max_degree = 0;
#pragma omp parallel for reduction(max : max_degree) schedule(static)
    for (std::int64_t i = 0; i < bound; ++i) {
        const NodeId v{static_cast<std::uint32_t>(i)};
        if (g.is_live(v)) max_degree = std::max(max_degree, g.degree(v));
    }
    std::vector<std::size_t> by_degree(max_degree + 1, 0);
#pragma omp parallel
    {
        std::vector<std::size_t> local(max_degree + 1, 0);
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < bound; ++i) {
            const NodeId v{static_cast<std::uint32_t>(i)};
            if (g.is_live(v)) ++local[g.degree(v)];
        }
#pragma omp critical
        for (std::size_t k = 0; k <= max_degree; ++k) by_degree[k] += local[k];
    }
    return histogram_from_counts(by_degree, g.node_count());
#else
    return serial::degree_distribution(g);
#endif
}

std::vector<double> local_clustering_all(const Graph& g) {
#ifdef SFNET_USE_OPENMP
    const std::size_t bound = g.id_bound();
    std::vector<double> out(bound, 0.0);
#pragma omp parallel
    {
        std::vector<std::uint32_t> mark(bound, 0);
#pragma omp for schedule(dynamic, 512)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(bound); ++i) {
            const NodeId v{static_cast<std::uint32_t>(i)};
            if (!g.is_live(v)) continue;
            out[i] = coefficient(neighbor_links(g, v, mark, v.value + 1), g.degree(v));
        }
    }
    return out;
#else
    return serial::local_clustering_all(g);
#endif
}

double average_clustering(const Graph& g) {
    require_nonempty(g, "average_clustering");
    return mean_over_live(g, sfnet::local_clustering_all(g));
}

double average_degree(const Graph& g) {
    require_nonempty(g, "average_degree");
    return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
}

ClusterStats cluster_size_distribution(const Graph& g) {
    require_nonempty(g, "cluster_size_distribution");
    const ComponentLabeling labels = connected_components(g);
    // Labels follow smallest member id, so max_element picks the tie-break winner.
    const auto giant = static_cast<std::size_t>(
        std::max_element(labels.sizes.begin(), labels.sizes.end()) - labels.sizes.begin());
    ClusterStats out;
    out.node_count = g.node_count();
    out.giant_size = labels.sizes[giant];
    out.other_sizes.reserve(labels.sizes.size() - 1);
    for (std::size_t c = 0; c < labels.sizes.size(); ++c) {
        if (c != giant) out.other_sizes.push_back(labels.sizes[c]);
    }
    std::sort(out.other_sizes.begin(), out.other_sizes.end(), std::greater<>());
    return out;
}

double giant_fraction(const Graph& g) {
    const ClusterStats c = cluster_size_distribution(g);
    return static_cast<double>(c.giant_size) / static_cast<double>(c.node_count);
}

PowerLawFit fit_power_law(std::span<const PowerLawPoint> points, double x_min, double x_max) {
    PowerLawFit fit;
    fit.x_min = x_min;
    fit.x_max = x_max;
    std::vector<double> lx;
    std::vector<double> ly;
    for (const auto& pt : points) {
        if (pt.x >= x_min && pt.x <= x_max && pt.x > 0.0 && pt.y > 0.0) {
            lx.push_back(std::log(pt.x));
            ly.push_back(std::log(pt.y));
        }
    }
    fit.points = lx.size();
    std::vector<double> distinct = lx;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (x_min > x_max || distinct.size() < 3) return fit;

    const stats::LinearFit line = stats::least_squares(lx, ly);
    fit.exponent = -line.slope;
    fit.std_error = line.slope_stderr;
    fit.r_squared = line.r_squared;
    fit.valid = true;
    return fit;
}

PowerLawFit fit_degree_exponent(const DegreeHistogram& h, std::size_t m, const FitOptions& options) {
    const std::size_t k_min = options.degree_k_min != 0 ? options.degree_k_min : std::max<std::size_t>(m, 1);
    std::size_t k_max = options.degree_k_max;
    if (k_max == 0) {
        for (const auto& [k, c] : h.counts) {
            if (c >= options.min_tail_count_degree) k_max = std::max(k_max, k);
        }
    }
    std::vector<PowerLawPoint> pts;
    for (const auto& [k, c] : h.counts) {
        if (k > 0) pts.push_back({static_cast<double>(k), static_cast<double>(c) / static_cast<double>(h.total)});
    }
    return fit_power_law(pts, static_cast<double>(k_min), static_cast<double>(k_max));
}

PowerLawFit fit_cluster_exponent(const ClusterStats& clusters, const FitOptions& options) {
    const auto hist = clusters.size_histogram();
    std::size_t s_max = options.cluster_s_max;
    if (s_max == 0) {
        for (const auto& [s, c] : hist) {
            if (c >= options.min_tail_count_cluster) s_max = std::max(s_max, s);
        }
    }
    std::vector<PowerLawPoint> pts;
    for (const auto& [s, c] : hist) pts.push_back({static_cast<double>(s), static_cast<double>(c)});
    return fit_power_law(pts, static_cast<double>(options.cluster_s_min), static_cast<double>(s_max));
}

std::vector<std::pair<std::size_t, double>> collapse_degree_distribution(const DegreeHistogram& h, std::size_t m) {
    if (h.total == 0) throw std::domain_error("collapse_degree_distribution: empty histogram");
    const double scale = 2.0 * static_cast<double>(m) * static_cast<double>(m);
    std::vector<std::pair<std::size_t, double>> out;
    out.reserve(h.counts.size());
    for (const auto& [k, c] : h.counts) out.emplace_back(k, h.probability(k) / scale);
    return out;
}

double collapse_ks_distance(std::span<const std::pair<std::size_t, double>> a,
                            std::span<const std::pair<std::size_t, double>> b, std::size_t k_lo, std::size_t k_hi) {
    auto restrict_range = [k_lo, k_hi](std::span<const std::pair<std::size_t, double>> curve) {
        std::map<std::size_t, double> out;
        double mass = 0.0;
        for (const auto& [k, v] : curve) {
            if (k >= k_lo && k <= k_hi) {
                out[k] += v;
                mass += v;
            }
        }
        if (mass > 0.0) {
            for (auto& [k, v] : out) v /= mass;
        }
        return out;
    };
    const auto ra = restrict_range(a);
    const auto rb = restrict_range(b);
    double ca = 0.0;
    double cb = 0.0;
    double worst = 0.0;
    for (std::size_t k = k_lo; k <= k_hi; ++k) {
        if (auto it = ra.find(k); it != ra.end()) ca += it->second;
        if (auto it = rb.find(k); it != rb.end()) cb += it->second;
        worst = std::max(worst, std::fabs(ca - cb));
    }
    return worst;
}

MetricsReport compute_metrics(const Graph& g, std::size_t m, const FitOptions& options) {
    MetricsReport r;
    r.node_count = g.node_count();
    r.edge_count = g.edge_count();
    r.gamma = fit_degree_exponent(degree_distribution(g), m, options);
    r.avg_degree = average_degree(g);
    const ClusterStats clusters = cluster_size_distribution(g);
    r.tau = fit_cluster_exponent(clusters, options);
    r.avg_clustering = average_clustering(g);
    r.giant_fraction = static_cast<double>(clusters.giant_size) / static_cast<double>(clusters.node_count);
    r.cluster_count = clusters.cluster_count();
    r.cluster_sizes = clusters.other_sizes;
    return r;
}

}  // namespace sfnet
