#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "labelprop/graph.hpp"

namespace labelprop {

// Deduplicated (entity, attribute) pairs in first-appearance order.
struct AttributeRecords {
    std::vector<std::pair<std::string, std::string>> pairs;

    // Parses `entity<TAB>attribute` lines; `#` comments and blank lines are
    // skipped, duplicate pairs collapse to one.
    static AttributeRecords parse(std::istream& in);
    static AttributeRecords parse_file(const std::string& path);

    void add(std::string entity, std::string attribute);
};

struct SimilarityResult {
    Graph graph;
    std::uint64_t total_entities = 0;
    std::uint64_t isolated_entities = 0;  // entities with no edge >= min_shared
};

// Edge weight = number of shared attributes; an edge is emitted iff that
// count reaches min_shared. Built via an inverted index attribute ->
// entity list with pair-count accumulation, not an all-pairs scan.
// Attributes held by more than max_attribute_frequency entities are skipped.
SimilarityResult build_similarity_graph(
    const AttributeRecords& records, std::uint32_t min_shared,
    std::uint64_t max_attribute_frequency = std::numeric_limits<std::uint64_t>::max());

}  // namespace labelprop
