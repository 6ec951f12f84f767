#include "labelprop/propagation.hpp"

#include <algorithm>
#include <deque>

#include "labelprop/common.hpp"

namespace labelprop {

const char* halt_reason_name(HaltReason r) {
    switch (r) {
        case HaltReason::AllLabeled: return "ALL_LABELED";
        case HaltReason::FixedPoint: return "FIXED_POINT";
        case HaltReason::MaxSupersteps: return "MAX_SUPERSTEPS";
    }
    return "?";
}

std::map<std::string, double> aggregate(std::span<const Contribution> incoming) {
    std::map<std::string, double> scores;
    for (const auto& c : incoming)
        for (const auto& label : c.labels)
            scores[label] += c.weight;
    return scores;
}

std::vector<std::string> select_majority(const std::map<std::string, double>& scores,
                                         TieBreak tie_break) {
    if (scores.empty()) return {};
    double best = scores.begin()->second;
    for (const auto& [label, score] : scores)
        if (score > best) best = score;
    std::vector<std::string> out;
    for (const auto& [label, score] : scores) {
        if (score == best) {
            out.push_back(label);
            if (tie_break == TieBreak::LexSmallest) break;  // map is in lex order
        }
    }
    return out;
}

std::uint64_t count_supersteps(std::span<const std::uint64_t> changed_per_superstep,
                               HaltReason reason) {
    std::uint64_t working = 0;
    for (auto c : changed_per_superstep)
        if (c > 0) ++working;
    if (reason == HaltReason::FixedPoint) ++working;  // the detection step
    return working;
}

std::pair<LabelState, std::uint64_t> superstep(const Graph& graph, const LabelState& state,
                                               const PropagationConfig& config,
                                               std::int32_t superstep_number) {
    LabelState next = state;
    std::uint64_t changed = 0;
    std::vector<Contribution> incoming;
    for (NodeIndex v = 0; v < graph.node_count(); ++v) {
        if (state.is_labeled(v)) continue;
        incoming.clear();
        for (const auto& nb : graph.neighbors(v))  // ascending source order
            if (state.is_labeled(nb.node))
                incoming.push_back({state.labels[nb.node], nb.weight});
        if (incoming.empty()) continue;
        next.labels[v] = select_majority(aggregate(incoming), config.tie_break);
        next.labeled_at[v] = superstep_number;
        ++changed;
    }
    return {std::move(next), changed};
}

namespace {

// Labels interned as dense ids in lexicographic order, so id comparisons
// reproduce lexicographic tie-breaking. Propagation can never introduce a
// label that is not in some seed set.
struct LabelDict {
    std::vector<std::string> names;  // sorted

    explicit LabelDict(const LabelState& seeds) {
        for (const auto& set : seeds.labels)
            names.insert(names.end(), set.begin(), set.end());
        std::sort(names.begin(), names.end());
        names.erase(std::unique(names.begin(), names.end()), names.end());
    }

    std::uint32_t id(const std::string& label) const {
        return static_cast<std::uint32_t>(
            std::lower_bound(names.begin(), names.end(), label) - names.begin());
    }
};

void check_seed_contract(const LabelState& seeds, std::size_t n) {
    validate_label_state(seeds, n);
    for (std::size_t v = 0; v < n; ++v)
        if (seeds.labeled_at[v] != LabelState::kUnlabeled && seeds.labeled_at[v] != 0)
            throw ContractError("seed state has labeled_at >= 1 at node " + std::to_string(v));
}

}  // namespace

std::pair<LabelState, RunReport> run(const Graph& graph, const LabelState& seeds,
                                     const PropagationConfig& config) {
    const std::size_t n = graph.node_count();
    check_seed_contract(seeds, n);

    LabelDict dict(seeds);
    std::vector<std::vector<std::uint32_t>> ids(n);  // sorted = lex order
    std::vector<std::int32_t> at(seeds.labeled_at);
    std::vector<NodeIndex> unlabeled;
    for (std::size_t v = 0; v < n; ++v) {
        if (at[v] == LabelState::kUnlabeled) {
            unlabeled.push_back(static_cast<NodeIndex>(v));
            continue;
        }
        ids[v].reserve(seeds.labels[v].size());
        for (const auto& l : seeds.labels[v]) ids[v].push_back(dict.id(l));
    }

    std::vector<double> score(dict.names.size(), 0.0);
    std::vector<std::uint32_t> touched;
    std::vector<NodeIndex> newly;
    RunReport report;
    HaltReason reason;

    std::int32_t t = 0;
    while (true) {
        ++t;
        newly.clear();
        for (NodeIndex v : unlabeled) {
            touched.clear();
            for (const auto& nb : graph.neighbors(v)) {
                std::int32_t nat = at[nb.node];
                if (nat == LabelState::kUnlabeled || nat >= t) continue;  // snapshot
                for (std::uint32_t lid : ids[nb.node]) {
                    if (score[lid] == 0.0) touched.push_back(lid);  // weights are positive
                    score[lid] += nb.weight;
                }
            }
            if (touched.empty()) continue;
            if (config.tie_break == TieBreak::LexSmallest) {
                std::uint32_t best_id = touched.front();
                double best = score[best_id];
                for (std::uint32_t lid : touched) {
                    if (score[lid] > best || (score[lid] == best && lid < best_id)) {
                        best = score[lid];
                        best_id = lid;
                    }
                }
                ids[v].assign(1, best_id);
            } else {
                double best = score[touched.front()];
                for (std::uint32_t lid : touched)
                    if (score[lid] > best) best = score[lid];
                ids[v].clear();
                for (std::uint32_t lid : touched)
                    if (score[lid] == best) ids[v].push_back(lid);
                std::sort(ids[v].begin(), ids[v].end());
            }
            for (std::uint32_t lid : touched) score[lid] = 0.0;
            newly.push_back(v);
        }
        for (NodeIndex v : newly) at[v] = t;
        std::erase_if(unlabeled, [&](NodeIndex v) { return at[v] != LabelState::kUnlabeled; });

        report.changed_per_superstep.push_back(newly.size());
        if (unlabeled.empty()) {
            reason = HaltReason::AllLabeled;
            break;
        }
        if (newly.empty()) {
            reason = HaltReason::FixedPoint;
            break;
        }
        if (config.max_supersteps != 0 &&
            static_cast<std::uint64_t>(t) == config.max_supersteps) {
            reason = HaltReason::MaxSupersteps;
            break;
        }
    }

    LabelState final_state(n);
    for (std::size_t v = 0; v < n; ++v) {
        final_state.labeled_at[v] = at[v];
        final_state.labels[v].reserve(ids[v].size());
        for (std::uint32_t lid : ids[v]) final_state.labels[v].push_back(dict.names[lid]);
    }
    report.halt_reason = reason;
    report.unlabeled_count = unlabeled.size();
    report.labeled_count = n - report.unlabeled_count;
    report.supersteps_executed = count_supersteps(report.changed_per_superstep, reason);
    return {std::move(final_state), std::move(report)};
}

LabelState oracle_labels(const Graph& graph, const LabelState& seeds, TieBreak tie_break) {
    const std::size_t n = graph.node_count();
    check_seed_contract(seeds, n);

    // Multi-source BFS for hop distances from the seed set.
    constexpr std::int32_t kUnreached = -1;
    std::vector<std::int32_t> dist(n, kUnreached);
    std::deque<NodeIndex> queue;
    for (std::size_t v = 0; v < n; ++v) {
        if (seeds.labeled_at[v] == 0) {
            dist[v] = 0;
            queue.push_back(static_cast<NodeIndex>(v));
        }
    }
    std::int32_t max_dist = 0;
    while (!queue.empty()) {
        NodeIndex u = queue.front();
        queue.pop_front();
        for (const auto& nb : graph.neighbors(u)) {
            if (dist[nb.node] != kUnreached) continue;
            dist[nb.node] = dist[u] + 1;
            max_dist = std::max(max_dist, dist[nb.node]);
            queue.push_back(nb.node);
        }
    }

    // Group nodes by distance, then resolve each layer from the previous one.
    std::vector<std::vector<NodeIndex>> layers(static_cast<std::size_t>(max_dist) + 1);
    for (std::size_t v = 0; v < n; ++v)
        if (dist[v] > 0) layers[static_cast<std::size_t>(dist[v])].push_back(static_cast<NodeIndex>(v));

    LabelState result = seeds;
    for (std::int32_t d = 1; d <= max_dist; ++d) {
        for (NodeIndex v : layers[static_cast<std::size_t>(d)]) {
            std::vector<Contribution> incoming;
            for (const auto& nb : graph.neighbors(v))  // ascending source order
                if (dist[nb.node] == d - 1)
                    incoming.push_back({result.labels[nb.node], nb.weight});
            result.labels[v] = select_majority(aggregate(incoming), tie_break);
            result.labeled_at[v] = d;
        }
    }
    return result;
}

}  // namespace labelprop
