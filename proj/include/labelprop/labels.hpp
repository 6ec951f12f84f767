#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "labelprop/graph.hpp"

namespace labelprop {

// Per-node label assignment. labels[v] is a lexicographically sorted,
// duplicate-free set; it is non-empty iff labeled_at[v] != kUnlabeled.
// labeled_at is 0 for seeds and the superstep number for propagated nodes.
struct LabelState {
    static constexpr std::int32_t kUnlabeled = -1;

    std::vector<std::vector<std::string>> labels;
    std::vector<std::int32_t> labeled_at;

    LabelState() = default;
    explicit LabelState(std::size_t n)
        : labels(n), labeled_at(n, kUnlabeled) {}

    std::size_t size() const { return labeled_at.size(); }

    bool is_labeled(NodeIndex v) const { return labeled_at[v] != kUnlabeled; }

    std::size_t labeled_count() const;
    std::size_t unlabeled_count() const { return size() - labeled_count(); }

    bool operator==(const LabelState&) const = default;
};

// Checks the structural invariants above; throws ContractError naming the
// first offending node.
void validate_label_state(const LabelState& state, std::size_t node_count);

// Sorts and deduplicates in place; rejects empty label strings.
void normalize_label_set(std::vector<std::string>& labels);

}  // namespace labelprop
