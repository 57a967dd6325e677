#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace sfnet {

/// Dense node identifier. Ids are handed out in increasing order and are
/// never reused after removal, so edge lists exported before and after an
/// attack refer to the same nodes.
struct NodeId {
    std::uint32_t value = 0;

    friend constexpr bool operator==(NodeId, NodeId) = default;
    friend constexpr auto operator<=>(NodeId, NodeId) = default;
};

/// Undirected simple graph with per-node fitness.
///
/// Storage is indexed by NodeId::value over every id ever issued; removed
/// slots keep an empty neighbor list and are flagged dead. Neighbor lists are
/// unordered vectors: degree is O(1), removal of a node of degree k costs
/// O(sum of its neighbors' degrees).
///
/// Mutation is single-writer. Const member functions are safe to call from
/// several threads at once.
class Graph {
public:
    Graph() = default;

    /// Reserve storage for `nodes` ids.
    void reserve(std::size_t nodes);

    /// Adds an isolated node. Throws std::domain_error unless 0 <= fitness <= 1.
    NodeId add_node(double fitness);

    /// Throws PreconditionError on self-loops, duplicate edges or dead endpoints.
    void add_edge(NodeId u, NodeId v);

    /// Removes v together with its incident edges.
    void remove_node(NodeId v);

    [[nodiscard]] std::size_t degree(NodeId v) const;
    [[nodiscard]] double fitness(NodeId v) const;
    [[nodiscard]] std::span<const NodeId> neighbors(NodeId v) const;
    [[nodiscard]] bool has_edge(NodeId u, NodeId v) const;

    [[nodiscard]] bool is_live(NodeId v) const noexcept {
        return v.value < alive_.size() && alive_[v.value] != 0;
    }

    /// Number of live nodes.
    [[nodiscard]] std::size_t node_count() const noexcept { return live_count_; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edge_count_; }
    /// One past the largest id ever issued; live ids are a subset of [0, id_bound()).
    [[nodiscard]] std::size_t id_bound() const noexcept { return alive_.size(); }

    /// Live ids in increasing order.
    [[nodiscard]] std::vector<NodeId> live_nodes() const;

    /// Edges as (u, v) with u < v, sorted lexicographically.
    [[nodiscard]] std::vector<std::pair<NodeId, NodeId>> edges() const;

private:
    void require_live(NodeId v, const char* op) const;

    std::vector<std::vector<NodeId>> adjacency_;
    std::vector<double> fitness_;
    std::vector<std::uint8_t> alive_;
    std::size_t live_count_ = 0;
    std::size_t edge_count_ = 0;
};

inline Graph new_graph() { return Graph{}; }

/// Component id per id slot (dead slots hold `npos`) and component sizes.
/// Components are numbered in order of their smallest member id, so the
/// labeling is a pure function of the graph.
struct ComponentLabeling {
    static constexpr std::uint32_t npos = UINT32_MAX;

    std::vector<std::uint32_t> component_of;
    std::vector<std::size_t> sizes;

    [[nodiscard]] std::size_t count() const noexcept { return sizes.size(); }
};

ComponentLabeling connected_components(const Graph& g);

/// Fraction of neighbor pairs of v that are themselves adjacent. Nodes of
/// degree 0 or 1 have coefficient 0.
double local_clustering(const Graph& g, NodeId v);

}  // namespace sfnet

template <>
struct std::hash<sfnet::NodeId> {
    std::size_t operator()(sfnet::NodeId id) const noexcept { return std::hash<std::uint32_t>{}(id.value); }
};
