#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "labelprop/graph.hpp"

namespace labelprop {

enum class Strategy : std::uint8_t {
    Hash = 0,      // FNV-1a-64 of the external id, mod k
    Range = 1,     // contiguous dense-index blocks of size ceil(n/k)
    GreedyBfs = 2, // BFS growth toward balanced, connected-ish parts
};

const char* strategy_name(Strategy s);

struct GhostEntry {
    NodeIndex node;      // remote neighbor of some owned node
    std::uint16_t owner; // its part
    bool operator==(const GhostEntry&) const = default;
};

struct BoundaryTarget {
    std::uint16_t part;
    NodeIndex node;
    bool operator==(const BoundaryTarget&) const = default;
};

// An owned node together with the remote (part, node) destinations it must
// broadcast to.
struct BoundaryEntry {
    NodeIndex node;
    std::vector<BoundaryTarget> targets;  // sorted by (part, node)
    bool operator==(const BoundaryEntry&) const = default;
};

struct Partitioning {
    std::uint16_t k = 1;
    std::vector<std::uint16_t> part_of;             // node -> part
    std::vector<std::vector<NodeIndex>> owned;      // per part, ascending
    std::vector<std::vector<GhostEntry>> ghosts;    // per part, sorted by node
    std::vector<std::vector<BoundaryEntry>> boundary;  // per part, sorted by node
};

// Splits all nodes across k parts under the chosen strategy and derives
// exact ghost and boundary tables. k > n is allowed; surplus parts stay
// empty.
Partitioning partition(const Graph& graph, std::uint16_t k, Strategy strategy);

// Number of undirected edges whose endpoints lie in different parts.
std::uint64_t edge_cut(const Graph& graph, const Partitioning& parts);

}  // namespace labelprop
