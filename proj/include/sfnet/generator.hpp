#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sfnet/graph.hpp"
#include "sfnet/rng.hpp"

namespace sfnet {

/// Growth-phase parameters. The seed ring has m0() = m + 2 nodes.
struct GenerationParams {
    std::size_t n0 = 30000;
    std::size_t m = 3;
    double p = 0.5;  ///< probability that a new node attaches by popularity

    [[nodiscard]] std::size_t m0() const noexcept { return m + 2; }

    /// Throws ParameterError naming the first violated constraint.
    void validate() const;
};

enum class AttachmentMode { popularity, fitness };

/// How the popularity/fitness mode is chosen during growth.
enum class ModeSelection {
    per_node,  ///< one draw per new node; all of its links use that mode
    per_link,  ///< an independent draw for every link
};

struct GrowOptions {
    ModeSelection mode_selection = ModeSelection::per_node;
};

/// Cycle on m0 nodes, fitness of each node drawn uniformly from the stream.
Graph build_seed_ring(std::size_t m0, RngStream& rng);

struct AttachmentWeights {
    AttachmentMode mode = AttachmentMode::popularity;
    /// Normalized attachment probability per id slot (zero for dead slots).
    std::vector<double> weights;
};

/// Draws the attachment mode (popularity with probability p) and returns
/// the normalized target distribution: k_i in popularity mode, f_i * k_i in
/// fitness mode. Falls back to popularity when every fitness weight is zero.
/// Throws PreconditionError if g has no edges.
AttachmentWeights attachment_weights(const Graph& g, double p, RngStream& rng);

/// Unnormalized weights for a fixed mode.
std::vector<double> attachment_weights(const Graph& g, AttachmentMode mode);

/// Draws m distinct indices sequentially without replacement, renormalizing
/// after each pick. If fewer than m indices have positive weight, the rest
/// are padded uniformly from the remaining indices; ParameterError if
/// weights.size() < m.
std::vector<NodeId> sample_targets(std::span<const double> weights, std::size_t m, RngStream& rng);

/// As above, but padding is restricted to live nodes of g.
std::vector<NodeId> sample_targets(const Graph& g, std::span<const double> weights, std::size_t m,
                                   RngStream& rng);

/// Grows a connected network of exactly params.n0 nodes and
/// m0 + (n0 - m0) * m edges. Targets of each new node are chosen from the
/// graph as it stood before that node was inserted.
Graph grow(const GenerationParams& params, RngStream& rng, const GrowOptions& options = {});

}  // namespace sfnet
