#include "labelprop/labels.hpp"

#include <algorithm>

#include "labelprop/common.hpp"

namespace labelprop {

std::size_t LabelState::labeled_count() const {
    std::size_t c = 0;
    for (auto at : labeled_at)
        if (at != kUnlabeled) ++c;
    return c;
}

void normalize_label_set(std::vector<std::string>& labels) {
    for (const auto& l : labels)
        if (l.empty()) throw DataError("empty label string");
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
}

void validate_label_state(const LabelState& state, std::size_t node_count) {
    if (state.labels.size() != node_count || state.labeled_at.size() != node_count)
        throw ContractError("label state size does not match graph");
    for (std::size_t v = 0; v < node_count; ++v) {
        bool labeled = state.labeled_at[v] != LabelState::kUnlabeled;
        if (labeled != !state.labels[v].empty())
            throw ContractError("node " + std::to_string(v) +
                                ": labels non-empty iff labeled_at set");
        if (!std::is_sorted(state.labels[v].begin(), state.labels[v].end()))
            throw ContractError("node " + std::to_string(v) + ": label set not sorted");
        if (std::adjacent_find(state.labels[v].begin(), state.labels[v].end()) !=
            state.labels[v].end())
            throw ContractError("node " + std::to_string(v) + ": duplicate label");
    }
}

}  // namespace labelprop
