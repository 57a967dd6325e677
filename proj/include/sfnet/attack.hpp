#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sfnet/graph.hpp"
#include "sfnet/rng.hpp"

namespace sfnet {

enum class AttackKind { none, central, peripheral, general };

std::string_view to_string(AttackKind kind) noexcept;
/// Parses the lowercase names `central|peripheral|general|none`.
std::optional<AttackKind> parse_attack_kind(std::string_view name) noexcept;

struct AttackSpec {
    AttackKind kind = AttackKind::none;
    double eta = 0.0;  ///< fraction of nodes removed, in [0,1)

    void validate() const;

    /// round(eta * n0) with halves rounded up; always 0 for AttackKind::none.
    [[nodiscard]] std::size_t removal_count(std::size_t n0) const;
};

/// How removal candidates are drawn.
enum class RemovalOrder {
    sequential,  ///< one at a time, weights recomputed from current degrees
    batch,       ///< all N_a drawn up front from the initial degrees
};

/// Removal weight of a node of degree k: k (central), 1/(k+1) (peripheral), 1 (general).
double removal_weight(AttackKind kind, std::size_t degree) noexcept;

/// Unnormalized removal weights per id slot (zero for dead slots). Central
/// attack on a graph without edges degrades to uniform weights.
std::vector<double> removal_weights(const Graph& g, AttackKind kind);

/// Removes spec.removal_count(g.node_count()) nodes. Throws ParameterError
/// if that is not smaller than the node count.
Graph apply_attack(Graph g, const AttackSpec& spec, RngStream& rng,
                   RemovalOrder order = RemovalOrder::sequential);

}  // namespace sfnet
