#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace labelprop {

using NodeIndex = std::uint32_t;

// Bijection between external node ids (strings from input files) and the
// dense indices 0..n-1 used everywhere internally. Dense indices are handed
// out in intern order.
class IdTable {
public:
    NodeIndex intern(std::string name);
    std::optional<NodeIndex> find(std::string_view name) const;
    const std::string& name(NodeIndex i) const { return names_[i]; }
    std::size_t size() const { return names_.size(); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, NodeIndex> index_;
};

struct Neighbor {
    NodeIndex node;
    double weight;

    bool operator==(const Neighbor&) const = default;
};

// Immutable undirected weighted graph in CSR form. Adjacency lists are
// sorted ascending by neighbor index and mirrored: (j,w) in adj[i] iff
// (i,w) in adj[j]. Construct through GraphBuilder.
class Graph {
public:
    Graph() = default;

    std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const { return adjacency_.size() / 2; }

    std::span<const Neighbor> neighbors(NodeIndex i) const {
        return {adjacency_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
    }

    std::size_t degree(NodeIndex i) const { return offsets_[i + 1] - offsets_[i]; }

    const IdTable& ids() const { return ids_; }

private:
    friend class GraphBuilder;

    IdTable ids_;
    std::vector<std::size_t> offsets_;  // size n+1
    std::vector<Neighbor> adjacency_;
};

// Accumulates undirected edges, validating as it goes, then freezes them
// into a Graph. Endpoints are interned in order of first appearance.
class GraphBuilder {
public:
    // Throws DataError on self-loops, non-positive or non-finite weights,
    // and duplicate unordered pairs.
    void add_edge(std::string_view a, std::string_view b, double weight);

    std::size_t edge_count() const { return edges_.size(); }

    Graph build() &&;

private:
    struct PendingEdge {
        NodeIndex a;
        NodeIndex b;
        double weight;
    };

    IdTable ids_;
    std::vector<PendingEdge> edges_;
    std::unordered_map<std::uint64_t, char> seen_pairs_;
};

}  // namespace labelprop
