#include "labelprop/partition.hpp"

#include <algorithm>
#include <deque>

#include "labelprop/common.hpp"

namespace labelprop {

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Hash: return "hash";
        case Strategy::Range: return "range";
        case Strategy::GreedyBfs: return "greedy";
    }
    return "?";
}

namespace {

std::vector<std::uint16_t> assign_hash(const Graph& g, std::uint16_t k) {
    std::vector<std::uint16_t> part(g.node_count());
    for (NodeIndex v = 0; v < g.node_count(); ++v)
        part[v] = static_cast<std::uint16_t>(fnv1a64(g.ids().name(v)) % k);
    return part;
}

std::vector<std::uint16_t> assign_range(const Graph& g, std::uint16_t k) {
    std::size_t n = g.node_count();
    std::size_t block = (n + k - 1) / k;  // ceil(n/k)
    std::vector<std::uint16_t> part(n);
    for (std::size_t v = 0; v < n; ++v)
        part[v] = static_cast<std::uint16_t>(v / std::max<std::size_t>(block, 1));
    return part;
}

// Grow each part by BFS from the smallest unassigned node until it holds
// ceil(n/k) nodes, re-seeding within the part when a component runs out.
// Connectivity is preferred, not guaranteed.
std::vector<std::uint16_t> assign_greedy_bfs(const Graph& g, std::uint16_t k) {
    std::size_t n = g.node_count();
    std::size_t target = (n + k - 1) / k;
    constexpr std::uint16_t kUnassigned = 0xffff;
    std::vector<std::uint16_t> part(n, kUnassigned);
    NodeIndex scan = 0;
    std::size_t assigned = 0;
    for (std::uint16_t p = 0; p < k && assigned < n; ++p) {
        std::size_t size = 0;
        std::deque<NodeIndex> frontier;
        while (size < target && assigned < n) {
            if (frontier.empty()) {
                while (scan < n && part[scan] != kUnassigned) ++scan;
                if (scan >= n) break;
                frontier.push_back(scan);
                part[scan] = p;
                ++size;
                ++assigned;
                if (size >= target) break;
            }
            NodeIndex u = frontier.front();
            frontier.pop_front();
            for (const auto& nb : g.neighbors(u)) {
                if (part[nb.node] != kUnassigned) continue;
                part[nb.node] = p;
                frontier.push_back(nb.node);
                ++size;
                ++assigned;
                if (size >= target) break;
            }
        }
    }
    // Round-robin fallback; unreachable when k*ceil(n/k) >= n, kept as a guard.
    std::uint16_t rr = 0;
    for (NodeIndex v = 0; v < n; ++v) {
        if (part[v] == kUnassigned) {
            part[v] = rr;
            rr = static_cast<std::uint16_t>((rr + 1) % k);
        }
    }
    return part;
}

}  // namespace

Partitioning partition(const Graph& graph, std::uint16_t k, Strategy strategy) {
    if (k < 1) throw ConfigError("worker count must be >= 1");
    Partitioning p;
    p.k = k;
    switch (strategy) {
        case Strategy::Hash: p.part_of = assign_hash(graph, k); break;
        case Strategy::Range: p.part_of = assign_range(graph, k); break;
        case Strategy::GreedyBfs: p.part_of = assign_greedy_bfs(graph, k); break;
    }

    std::size_t n = graph.node_count();
    p.owned.resize(k);
    p.ghosts.resize(k);
    p.boundary.resize(k);
    for (NodeIndex v = 0; v < n; ++v) p.owned[p.part_of[v]].push_back(v);

    for (std::uint16_t part = 0; part < k; ++part) {
        auto& ghosts = p.ghosts[part];
        auto& boundary = p.boundary[part];
        for (NodeIndex v : p.owned[part]) {
            BoundaryEntry entry{v, {}};
            for (const auto& nb : graph.neighbors(v)) {
                std::uint16_t owner = p.part_of[nb.node];
                if (owner == part) continue;
                ghosts.push_back({nb.node, owner});
                entry.targets.push_back({owner, nb.node});
            }
            if (!entry.targets.empty()) {
                std::sort(entry.targets.begin(), entry.targets.end(),
                          [](const BoundaryTarget& a, const BoundaryTarget& b) {
                              if (a.part != b.part) return a.part < b.part;
                              return a.node < b.node;
                          });
                boundary.push_back(std::move(entry));
            }
        }
        std::sort(ghosts.begin(), ghosts.end(),
                  [](const GhostEntry& a, const GhostEntry& b) { return a.node < b.node; });
        ghosts.erase(std::unique(ghosts.begin(), ghosts.end()), ghosts.end());
        // owned and boundary are already ascending by construction
    }
    return p;
}

std::uint64_t edge_cut(const Graph& graph, const Partitioning& parts) {
    std::uint64_t cut = 0;
    for (NodeIndex v = 0; v < graph.node_count(); ++v)
        for (const auto& nb : graph.neighbors(v))
            if (nb.node > v && parts.part_of[v] != parts.part_of[nb.node]) ++cut;
    return cut;
}

}  // namespace labelprop
