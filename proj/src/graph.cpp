#include "labelprop/graph.hpp"

#include <algorithm>
#include <cmath>

#include "labelprop/common.hpp"

namespace labelprop {

NodeIndex IdTable::intern(std::string name) {
    if (name.empty())
        throw DataError("node id must be non-empty");
    if (name.find('\t') != std::string::npos || name.find('\n') != std::string::npos)
        throw DataError("node id contains tab or newline: \"" + name + "\"");
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    NodeIndex id = static_cast<NodeIndex>(names_.size());
    index_.emplace(name, id);
    names_.push_back(std::move(name));
    return id;
}

std::optional<NodeIndex> IdTable::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

void GraphBuilder::add_edge(std::string_view a, std::string_view b, double weight) {
    if (a == b)
        throw DataError("self-loop on node \"" + std::string(a) + "\"");
    if (!std::isfinite(weight) || weight <= 0.0)
        throw DataError("edge " + std::string(a) + " -- " + std::string(b) +
                        " has non-positive weight");
    NodeIndex ia = ids_.intern(std::string(a));
    NodeIndex ib = ids_.intern(std::string(b));
    std::uint64_t key = ia < ib
        ? (static_cast<std::uint64_t>(ia) << 32) | ib
        : (static_cast<std::uint64_t>(ib) << 32) | ia;
    if (!seen_pairs_.emplace(key, 0).second)
        throw DataError("duplicate edge " + std::string(a) + " -- " + std::string(b));
    edges_.push_back({ia, ib, weight});
}

Graph GraphBuilder::build() && {
    Graph g;
    std::size_t n = ids_.size();
    g.ids_ = std::move(ids_);
    g.offsets_.assign(n + 1, 0);
    for (const auto& e : edges_) {
        ++g.offsets_[e.a + 1];
        ++g.offsets_[e.b + 1];
    }
    for (std::size_t i = 1; i <= n; ++i) g.offsets_[i] += g.offsets_[i - 1];
    g.adjacency_.resize(edges_.size() * 2);
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& e : edges_) {
        g.adjacency_[cursor[e.a]++] = {e.b, e.weight};
        g.adjacency_[cursor[e.b]++] = {e.a, e.weight};
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::sort(g.adjacency_.begin() + g.offsets_[i],
                  g.adjacency_.begin() + g.offsets_[i + 1],
                  [](const Neighbor& x, const Neighbor& y) { return x.node < y.node; });
    }
    return g;
}

}  // namespace labelprop
