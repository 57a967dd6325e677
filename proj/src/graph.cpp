#include "sfnet/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sfnet/errors.hpp"

namespace sfnet {

namespace {

std::string id_str(NodeId v) { return std::to_string(v.value); }

// Union-find with path halving and union by size.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0U);
    }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::size_t> size_;
};

}  // namespace

void Graph::reserve(std::size_t nodes) {
    adjacency_.reserve(nodes);
    fitness_.reserve(nodes);
    alive_.reserve(nodes);
}

NodeId Graph::add_node(double fitness) {
    if (!(fitness >= 0.0 && fitness <= 1.0)) {
        throw std::domain_error("add_node: fitness must lie in [0,1], got " + std::to_string(fitness));
    }
    if (alive_.size() >= ComponentLabeling::npos) {
        throw ParameterError("add_node: node id space exhausted");
    }
    const NodeId id{static_cast<std::uint32_t>(alive_.size())};
    adjacency_.emplace_back();
    fitness_.push_back(fitness);
    alive_.push_back(1);
    ++live_count_;
    return id;
}

void Graph::require_live(NodeId v, const char* op) const {
    if (!is_live(v)) {
        throw PreconditionError(std::string(op) + ": node " + id_str(v) + " is not live");
    }
}

void Graph::add_edge(NodeId u, NodeId v) {
    require_live(u, "add_edge");
    require_live(v, "add_edge");
    if (u == v) throw PreconditionError("add_edge: self-loop on node " + id_str(u));
    if (has_edge(u, v)) {
        throw PreconditionError("add_edge: duplicate edge " + id_str(u) + "-" + id_str(v));
    }
    adjacency_[u.value].push_back(v);
    adjacency_[v.value].push_back(u);
    ++edge_count_;
}

void Graph::remove_node(NodeId v) {
    require_live(v, "remove_node");
    auto& own = adjacency_[v.value];
    for (NodeId u : own) {
        auto& theirs = adjacency_[u.value];
        auto it = std::find(theirs.begin(), theirs.end(), v);
        *it = theirs.back();
        theirs.pop_back();
    }
    edge_count_ -= own.size();
    own.clear();
    own.shrink_to_fit();
    alive_[v.value] = 0;
    --live_count_;
}

std::size_t Graph::degree(NodeId v) const {
    require_live(v, "degree");
    return adjacency_[v.value].size();
}

double Graph::fitness(NodeId v) const {
    require_live(v, "fitness");
    return fitness_[v.value];
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
    require_live(v, "neighbors");
    return adjacency_[v.value];
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    if (!is_live(u) || !is_live(v)) return false;
    const auto& a = adjacency_[u.value];
    const auto& b = adjacency_[v.value];
    // Scan the shorter list.
    if (a.size() <= b.size()) return std::find(a.begin(), a.end(), v) != a.end();
    return std::find(b.begin(), b.end(), u) != b.end();
}

std::vector<NodeId> Graph::live_nodes() const {
    std::vector<NodeId> out;
    out.reserve(live_count_);
    for (std::uint32_t i = 0; i < alive_.size(); ++i) {
        if (alive_[i]) out.push_back(NodeId{i});
    }
    return out;
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count_);
    std::vector<NodeId> higher;
    for (std::uint32_t i = 0; i < alive_.size(); ++i) {
        if (!alive_[i]) continue;
        higher.clear();
        for (NodeId w : adjacency_[i]) {
            if (w.value > i) higher.push_back(w);
        }
        std::sort(higher.begin(), higher.end());
        for (NodeId w : higher) out.emplace_back(NodeId{i}, w);
    }
    return out;
}

ComponentLabeling connected_components(const Graph& g) {
    const std::size_t bound = g.id_bound();
    DisjointSets sets(bound);
    for (std::uint32_t i = 0; i < bound; ++i) {
        const NodeId v{i};
        if (!g.is_live(v)) continue;
        for (NodeId w : g.neighbors(v)) {
            if (w.value > i) sets.unite(i, w.value);
        }
    }

    ComponentLabeling out;
    out.component_of.assign(bound, ComponentLabeling::npos);
    std::vector<std::uint32_t> label_of_root(bound, ComponentLabeling::npos);
    for (std::uint32_t i = 0; i < bound; ++i) {
        if (!g.is_live(NodeId{i})) continue;
        const std::uint32_t root = sets.find(i);
        if (label_of_root[root] == ComponentLabeling::npos) {
            label_of_root[root] = static_cast<std::uint32_t>(out.sizes.size());
            out.sizes.push_back(0);
        }
        const std::uint32_t label = label_of_root[root];
        out.component_of[i] = label;
        ++out.sizes[label];
    }
    return out;
}

double local_clustering(const Graph& g, NodeId v) {
    const auto nbrs = g.neighbors(v);
    const std::size_t k = nbrs.size();
    if (k < 2) return 0.0;
    std::vector<NodeId> sorted(nbrs.begin(), nbrs.end());
    std::sort(sorted.begin(), sorted.end());
    std::size_t links = 0;
    for (NodeId u : sorted) {
        for (NodeId w : g.neighbors(u)) {
            if (w > u && std::binary_search(sorted.begin(), sorted.end(), w)) ++links;
        }
    }
    return static_cast<double>(links) / (static_cast<double>(k) * static_cast<double>(k - 1) / 2.0);
}

}  // namespace sfnet
