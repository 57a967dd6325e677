#include "sfnet/attack.hpp"

#include <cmath>

#include "sfnet/errors.hpp"
#include "sfnet/weighted_sampler.hpp"

namespace sfnet {

std::string_view to_string(AttackKind kind) noexcept {
    switch (kind) {
        case AttackKind::central: return "central";
        case AttackKind::peripheral: return "peripheral";
        case AttackKind::general: return "general";
        case AttackKind::none: break;
    }
    return "none";
}

std::optional<AttackKind> parse_attack_kind(std::string_view name) noexcept {
    if (name == "none") return AttackKind::none;
    if (name == "central") return AttackKind::central;
    if (name == "peripheral") return AttackKind::peripheral;
    if (name == "general") return AttackKind::general;
    return std::nullopt;
}

void AttackSpec::validate() const {
    if (!(eta >= 0.0 && eta < 1.0)) throw ParameterError("eta must lie in [0,1) (got " + std::to_string(eta) + ")");
}

std::size_t AttackSpec::removal_count(std::size_t n0) const {
    validate();
    if (kind == AttackKind::none) return 0;
    return static_cast<std::size_t>(std::floor(eta * static_cast<double>(n0) + 0.5));
}

double removal_weight(AttackKind kind, std::size_t degree) noexcept {
    switch (kind) {
        case AttackKind::central: return static_cast<double>(degree);
        case AttackKind::peripheral: return 1.0 / (static_cast<double>(degree) + 1.0);
        case AttackKind::general:
        case AttackKind::none: break;
    }
    return 1.0;
}

std::vector<double> removal_weights(const Graph& g, AttackKind kind) {
    if (g.node_count() == 0) throw PreconditionError("removal_weights: graph has no live nodes");
    const AttackKind effective = (kind == AttackKind::central && g.edge_count() == 0) ? AttackKind::general : kind;
    std::vector<double> w(g.id_bound(), 0.0);
    for (NodeId v : g.live_nodes()) w[v.value] = removal_weight(effective, g.degree(v));
    return w;
}

namespace {

void remove_sequential(Graph& g, AttackKind kind, std::size_t count, RngStream& rng) {
    WeightedSampler sampler(removal_weights(g, kind));
    bool uniform_fallback = kind == AttackKind::central && g.edge_count() == 0;
    for (std::size_t r = 0; r < count; ++r) {
        if (kind == AttackKind::central && !uniform_fallback && g.edge_count() == 0) {
            // Every survivor is isolated: continue uniformly.
            uniform_fallback = true;
            for (NodeId v : g.live_nodes()) sampler.set(v.value, 1.0);
        }
        const NodeId victim{static_cast<std::uint32_t>(sampler.sample(rng))};
        const std::vector<NodeId> nbrs(g.neighbors(victim).begin(), g.neighbors(victim).end());
        g.remove_node(victim);
        sampler.set(victim.value, 0.0);
        if (!uniform_fallback) {
            for (NodeId u : nbrs) sampler.set(u.value, removal_weight(kind, g.degree(u)));
        }
    }
}

void remove_batch(Graph& g, AttackKind kind, std::size_t count, RngStream& rng) {
    WeightedSampler sampler(removal_weights(g, kind));
    std::vector<NodeId> victims;
    victims.reserve(count);
    std::vector<std::uint8_t> chosen(g.id_bound(), 0);
    while (victims.size() < count) {
        if (!(sampler.total() > 0.0)) {
            // Only zero-weight nodes left (central attack): continue uniformly.
            for (NodeId v : g.live_nodes()) {
                if (!chosen[v.value]) sampler.set(v.value, 1.0);
            }
        }
        const std::size_t i = sampler.sample(rng);
        victims.push_back(NodeId{static_cast<std::uint32_t>(i)});
        chosen[i] = 1;
        sampler.set(i, 0.0);
    }
    for (NodeId v : victims) g.remove_node(v);
}

}  // namespace

Graph apply_attack(Graph g, const AttackSpec& spec, RngStream& rng, RemovalOrder order) {
    const std::size_t count = spec.removal_count(g.node_count());
    if (count == 0) return g;
    if (count >= g.node_count()) {
        throw ParameterError("attack would remove " + std::to_string(count) + " of " +
                             std::to_string(g.node_count()) + " nodes; N_a must be below the node count");
    }
    if (order == RemovalOrder::sequential) {
        remove_sequential(g, spec.kind, count, rng);
    } else {
        remove_batch(g, spec.kind, count, rng);
    }
    return g;
}

}  // namespace sfnet
