#include "sfnet/generator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sfnet/errors.hpp"
#include "sfnet/weighted_sampler.hpp"

namespace sfnet {

void GenerationParams::validate() const {
    if (m < 1) throw ParameterError("m must be >= 1 (got " + std::to_string(m) + ")");
    if (n0 < m0()) {
        throw ParameterError("n0 must be >= m0 = m + 2 (got n0=" + std::to_string(n0) +
                             ", m0=" + std::to_string(m0()) + ")");
    }
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("p must lie in [0,1] (got " + std::to_string(p) + ")");
}

Graph build_seed_ring(std::size_t m0, RngStream& rng) {
    if (m0 < 3) throw ParameterError("seed ring needs m0 >= 3 (got " + std::to_string(m0) + ")");
    Graph g;
    g.reserve(m0);
    for (std::size_t i = 0; i < m0; ++i) g.add_node(rng.uniform());
    for (std::uint32_t i = 0; i < m0; ++i) {
        g.add_edge(NodeId{i}, NodeId{static_cast<std::uint32_t>((i + 1) % m0)});
    }
    return g;
}

std::vector<double> attachment_weights(const Graph& g, AttachmentMode mode) {
    std::vector<double> w(g.id_bound(), 0.0);
    for (NodeId v : g.live_nodes()) {
        const auto k = static_cast<double>(g.degree(v));
        w[v.value] = mode == AttachmentMode::popularity ? k : g.fitness(v) * k;
    }
    return w;
}

namespace {

double normalize(std::vector<double>& w) {
    double sum = 0.0;
    for (double x : w) sum += x;
    if (sum > 0.0) {
        for (double& x : w) x /= sum;
    }
    return sum;
}

template <class IsCandidate>
std::vector<NodeId> sample_without_replacement(std::span<const double> weights, std::size_t m, RngStream& rng,
                                               IsCandidate is_candidate) {
    std::size_t candidates = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (is_candidate(i)) ++candidates;
    }
    if (candidates < m) {
        throw ParameterError("sample_targets: need " + std::to_string(m) + " targets but only " +
                             std::to_string(candidates) + " candidates exist");
    }

    std::vector<double> positive(weights.size(), 0.0);
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (is_candidate(i) && weights[i] > 0.0) positive[i] = weights[i];
    }
    WeightedSampler sampler(positive);
    std::vector<NodeId> out;
    out.reserve(m);
    std::vector<std::uint8_t> taken(weights.size(), 0);
    while (out.size() < m && sampler.total() > 0.0) {
        const std::size_t i = sampler.sample(rng);
        out.push_back(NodeId{static_cast<std::uint32_t>(i)});
        taken[i] = 1;
        sampler.set(i, 0.0);
    }
    if (out.size() < m) {
        // Degenerate input: pad uniformly over untaken candidates.
        std::vector<std::uint32_t> rest;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (is_candidate(i) && !taken[i]) rest.push_back(static_cast<std::uint32_t>(i));
        }
        while (out.size() < m) {
            const std::size_t j = rng.below(rest.size());
            out.push_back(NodeId{rest[j]});
            rest[j] = rest.back();
            rest.pop_back();
        }
    }
    return out;
}

}  // namespace

AttachmentWeights attachment_weights(const Graph& g, double p, RngStream& rng) {
    if (g.edge_count() == 0) throw PreconditionError("attachment_weights: graph has no edges");
    AttachmentWeights out;
    out.mode = rng.bernoulli(p) ? AttachmentMode::popularity : AttachmentMode::fitness;
    out.weights = attachment_weights(g, out.mode);
    if (normalize(out.weights) <= 0.0) {
        out.mode = AttachmentMode::popularity;
        out.weights = attachment_weights(g, out.mode);
        normalize(out.weights);
    }
    return out;
}

std::vector<NodeId> sample_targets(std::span<const double> weights, std::size_t m, RngStream& rng) {
    return sample_without_replacement(weights, m, rng, [](std::size_t) { return true; });
}

std::vector<NodeId> sample_targets(const Graph& g, std::span<const double> weights, std::size_t m,
                                   RngStream& rng) {
    return sample_without_replacement(weights, m, rng, [&g](std::size_t i) {
        return g.is_live(NodeId{static_cast<std::uint32_t>(i)});
    });
}

Graph grow(const GenerationParams& params, RngStream& rng, const GrowOptions& options) {
    params.validate();
    const std::size_t n0 = params.n0;
    const std::size_t m = params.m;

    Graph g = build_seed_ring(params.m0(), rng);
    g.reserve(n0);

    // Incrementally maintained k_i and f_i * k_i over all ids.
    WeightedSampler popularity(n0);
    WeightedSampler fitness(n0);
    std::size_t positive_fitness = 0;  // nodes with f_i * k_i > 0
    for (NodeId v : g.live_nodes()) {
        popularity.set(v.value, 2.0);
        fitness.set(v.value, 2.0 * g.fitness(v));
        if (g.fitness(v) > 0.0) ++positive_fitness;
    }

    std::vector<NodeId> targets;
    targets.reserve(m);
    auto already_chosen = [&targets](std::size_t i) {
        return std::any_of(targets.begin(), targets.end(), [i](NodeId t) { return t.value == i; });
    };

    for (std::size_t step = g.node_count(); step < n0; ++step) {
        const double f = rng.uniform();
        targets.clear();
        // Every existing node has degree >= 2, so the popularity sampler
        // always has at least m0 > m positive entries.
        const bool fitness_usable = positive_fitness >= m;
        auto pick_sampler = [&]() -> const WeightedSampler& {
            const bool use_popularity = rng.bernoulli(params.p) || !fitness_usable;
            return use_popularity ? popularity : fitness;
        };
        if (options.mode_selection == ModeSelection::per_node) {
            const WeightedSampler& sampler = pick_sampler();
            while (targets.size() < m) {
                const std::size_t i = sampler.sample(rng);
                if (!already_chosen(i)) targets.push_back(NodeId{static_cast<std::uint32_t>(i)});
            }
        } else {
            while (targets.size() < m) {
                const WeightedSampler& sampler = pick_sampler();
                std::size_t i;
                do {
                    i = sampler.sample(rng);
                } while (already_chosen(i));
                targets.push_back(NodeId{static_cast<std::uint32_t>(i)});
            }
        }

        const NodeId fresh = g.add_node(f);
        for (NodeId t : targets) {
            g.add_edge(fresh, t);
            popularity.add(t.value, 1.0);
            fitness.add(t.value, g.fitness(t));
        }
        popularity.set(fresh.value, static_cast<double>(m));
        fitness.set(fresh.value, f * static_cast<double>(m));
        if (f > 0.0) ++positive_fitness;
    }
    return g;
}

}  // namespace sfnet
