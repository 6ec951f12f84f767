#include "labelprop/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <unordered_set>

#include "labelprop/common.hpp"
#include "labelprop/io.hpp"

namespace labelprop {

namespace {

std::string node_name(std::uint64_t i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "n%06llu", static_cast<unsigned long long>(i));
    return buf;
}

std::string label_name(std::uint32_t i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "L%02u", i);
    return buf;
}

}  // namespace

SynthInstance generate_instance(const SynthConfig& config) {
    const std::uint64_t n = config.nodes;
    const std::uint64_t m = config.edges;
    const std::uint64_t max_edges = n < 2 ? 0 : n * (n - 1) / 2;
    if (m > max_edges)
        throw ConfigError("cannot place " + std::to_string(m) + " edges on " +
                          std::to_string(n) + " nodes");
    if (n >= 2 && m < n - 1)
        throw ConfigError("need at least " + std::to_string(n - 1) +
                          " edges for a spanning tree on " + std::to_string(n) + " nodes");
    if (config.label_count < 1) throw ConfigError("label count must be >= 1");
    if (config.seed_fraction < 0.0 || config.seed_fraction > 1.0)
        throw ConfigError("seed fraction must be in [0,1]");

    Rng rng(config.rng_seed);
    SynthInstance inst;
    inst.node_count = n;

    // Spanning tree over a random node order, then uniform extra edges.
    std::vector<std::uint64_t> order(n);
    for (std::uint64_t i = 0; i < n; ++i) order[i] = i;
    for (std::uint64_t i = n; i > 1; --i)
        std::swap(order[i - 1], order[rng.below(i)]);

    std::unordered_set<std::uint64_t> used;
    auto pair_key = [](std::uint64_t u, std::uint64_t v) {
        return u < v ? (u << 32) | v : (v << 32) | u;
    };
    inst.edges.reserve(m);
    auto add_edge = [&](std::uint64_t u, std::uint64_t v) {
        used.insert(pair_key(u, v));
        inst.edges.push_back({node_name(u), node_name(v),
                              static_cast<std::uint32_t>(1 + rng.below(5))});
    };
    for (std::uint64_t i = 1; i < n; ++i)
        add_edge(order[i], order[rng.below(i)]);
    while (inst.edges.size() < m) {
        std::uint64_t u = rng.below(n);
        std::uint64_t v = rng.below(n);
        if (u == v || used.count(pair_key(u, v))) continue;
        add_edge(u, v);
    }

    // Seed labels: a random sample of nodes, one or two labels each. An
    // edge list cannot carry isolated nodes, so an edgeless instance gets
    // no seeds either.
    if (inst.edges.empty()) return inst;
    std::uint64_t seed_count =
        static_cast<std::uint64_t>(std::llround(config.seed_fraction * static_cast<double>(n)));
    if (config.seed_fraction > 0.0 && n > 0 && seed_count == 0) seed_count = 1;
    std::vector<std::uint64_t> picks(n);
    for (std::uint64_t i = 0; i < n; ++i) picks[i] = i;
    for (std::uint64_t i = 0; i < seed_count; ++i)
        std::swap(picks[i], picks[i + rng.below(n - i)]);
    picks.resize(seed_count);
    std::sort(picks.begin(), picks.end());
    for (std::uint64_t node : picks) {
        std::vector<std::string> labels;
        labels.push_back(label_name(1 + static_cast<std::uint32_t>(rng.below(config.label_count))));
        if (rng.below(2) == 1)
            labels.push_back(label_name(1 + static_cast<std::uint32_t>(rng.below(config.label_count))));
        normalize_label_set(labels);
        inst.seeds.push_back({node_name(node), std::move(labels)});
    }
    return inst;
}

void write_edge_rows(std::ostream& out, const SynthInstance& inst) {
    for (const auto& e : inst.edges) {
        out << e.a << '\t' << e.b << '\t' << e.weight << '\n';
        if (!out) throw IoError("write failure on edge-list sink");
    }
}

void write_seed_rows(std::ostream& out, const SynthInstance& inst) {
    for (const auto& s : inst.seeds) {
        out << s.node << '\t';
        for (std::size_t i = 0; i < s.labels.size(); ++i) {
            if (i) out << ',';
            out << s.labels[i];
        }
        out << '\n';
        if (!out) throw IoError("write failure on seed sink");
    }
}

std::pair<Graph, LabelState> materialize(const SynthInstance& inst) {
    GraphBuilder builder;
    for (const auto& e : inst.edges)
        builder.add_edge(e.a, e.b, static_cast<double>(e.weight));
    Graph graph = std::move(builder).build();
    LabelState seeds(graph.node_count());
    for (const auto& s : inst.seeds) {
        auto id = graph.ids().find(s.node);
        if (!id) continue;  // isolated node on an edgeless instance
        seeds.labels[*id] = s.labels;
        seeds.labeled_at[*id] = 0;
    }
    return {std::move(graph), std::move(seeds)};
}

}  // namespace labelprop
