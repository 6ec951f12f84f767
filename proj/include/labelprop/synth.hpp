#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "labelprop/graph.hpp"
#include "labelprop/labels.hpp"

namespace labelprop {

// Deterministic bounded draws on top of mt19937_64. std::uniform_int_distribution
// is implementation-defined, so generated files would not be stable across
// standard libraries; plain modulo is, and bias is irrelevant here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

private:
    std::mt19937_64 engine_;
};

struct SynthConfig {
    std::uint64_t nodes = 0;
    std::uint64_t edges = 0;
    std::uint32_t label_count = 1;
    double seed_fraction = 0.0;
    std::uint64_t rng_seed = 0;
};

struct EdgeRow {
    std::string a;
    std::string b;
    std::uint32_t weight;  // in [1,5]
};

struct SeedRow {
    std::string node;
    std::vector<std::string> labels;
};

// A random spanning tree plus uniformly drawn extra edges, random integer
// weights in [1,5], and a random seed-label file. Fully determined by
// rng_seed. Infeasible (nodes, edges) combinations throw ConfigError.
struct SynthInstance {
    std::vector<EdgeRow> edges;
    std::vector<SeedRow> seeds;  // sorted by node id
    std::uint64_t node_count = 0;
};

SynthInstance generate_instance(const SynthConfig& config);

void write_edge_rows(std::ostream& out, const SynthInstance& inst);
void write_seed_rows(std::ostream& out, const SynthInstance& inst);

// In-memory form of the same instance, for tests and benchmarks.
std::pair<Graph, LabelState> materialize(const SynthInstance& inst);

}  // namespace labelprop
