#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "labelprop/graph.hpp"
#include "labelprop/labels.hpp"

namespace labelprop {

enum class TieBreak : std::uint8_t {
    LexSmallest = 0,   // single lexicographically smallest label among the maxima
    KeepAllTied = 1,   // all labels tied at the maximum score, sorted
};

enum class HaltReason : std::uint8_t {
    AllLabeled = 0,
    FixedPoint = 1,     // a superstep changed nothing while unlabeled nodes remain
    MaxSupersteps = 2,
};

struct PropagationConfig {
    TieBreak tie_break = TieBreak::LexSmallest;
    std::uint64_t max_supersteps = 0;  // 0 = unbounded
};

struct RunReport {
    std::uint64_t supersteps_executed = 0;
    std::uint64_t labeled_count = 0;
    std::uint64_t unlabeled_count = 0;
    HaltReason halt_reason = HaltReason::AllLabeled;
    std::vector<std::uint64_t> changed_per_superstep;

    bool operator==(const RunReport&) const = default;
};

const char* halt_reason_name(HaltReason r);

// One labeled neighbor's offering: its full label set and the edge weight.
struct Contribution {
    std::vector<std::string> labels;
    double weight = 0.0;
};

// score[l] = sum of weights over contributions containing l; every label in
// a multi-label set receives the full edge weight. The fold happens in the
// order given, so callers pass contributions in ascending source-node order
// to keep floating-point sums deterministic.
std::map<std::string, double> aggregate(std::span<const Contribution> incoming);

// Empty scores -> empty set. Otherwise the argmax under the tie policy.
// Scores are compared exactly; the summation-order contract makes that
// meaningful.
std::vector<std::string> select_majority(const std::map<std::string, double>& scores,
                                         TieBreak tie_break);

// One synchronous superstep: all reads come from the input snapshot. Every
// unlabeled node with at least one labeled neighbor becomes labeled and gets
// labeled_at = superstep_number; labeled nodes never change.
std::pair<LabelState, std::uint64_t> superstep(const Graph& graph, const LabelState& state,
                                               const PropagationConfig& config,
                                               std::int32_t superstep_number);

// Runs supersteps t = 1,2,... until every node is labeled, a superstep
// changes nothing, or the bound is hit. Seeds must carry labeled_at of 0 or
// kUnlabeled only.
std::pair<LabelState, RunReport> run(const Graph& graph, const LabelState& seeds,
                                     const PropagationConfig& config);

// Closed form of the same semantics, used as an oracle: labeled_at equals
// the hop distance from the seed set (multi-source BFS) and each node's
// labels come from exactly its distance-(d-1) neighbors, computed layer by
// layer. Deliberately shares no machinery with run().
LabelState oracle_labels(const Graph& graph, const LabelState& seeds, TieBreak tie_break);

// Counts supersteps that performed work, plus the detection step when the
// halt was a fixed point. Shared by the reference engine and the master.
std::uint64_t count_supersteps(std::span<const std::uint64_t> changed_per_superstep,
                               HaltReason reason);

}  // namespace labelprop
